//! Exact mp-charts from rook numbers, checked against brute-force
//! enumeration, with their moments.
//!
//! ```bash
//! cargo run -p mpchart --example exact_chart
//! ```

use mpchart::chart::{
    brute_force_chart, closed_form_mean, closed_form_variance, exact_chart, moments_from_chart,
    rook_numbers,
};
use mpchart::Graph;

fn main() -> mpchart::Result<()> {
    let g = Graph::from_labeled_edges(7, &[(1, 3), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7)])?;
    println!("rook numbers {:?}", rook_numbers(&g)?.r);

    let chart = exact_chart(&g)?;
    assert_eq!(chart, brute_force_chart(&g)?);
    let counts: Vec<String> = chart.counts().iter().map(ToString::to_string).collect();
    println!("chart {} (total {})", counts.join(" "), chart.total());

    let m = moments_from_chart(&chart);
    let deg = g.degree_profile();
    println!("mean {} = {}", m.mean, closed_form_mean(&deg, g.n())?);
    println!(
        "variance {} = {}",
        m.variance,
        closed_form_variance(&deg, &g.t_matrix(), g.n())?
    );

    // 24 vertices is the largest exact chart; counts exceed u64.
    let big = Graph::circulant(24, &[1, 5])?;
    let c = exact_chart(&big)?;
    println!(
        "circulant(24, {{1,5}}): {} permutations hit 0 edges",
        c.count(0)
    );
    Ok(())
}
