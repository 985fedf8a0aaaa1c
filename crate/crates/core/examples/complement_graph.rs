//! The M_G matrix of a graph yields the charts of both the graph and its
//! complement; the complement's moments follow from the graph's.
//!
//! ```bash
//! cargo run -p mpchart --example complement_graph
//! ```

use mpchart::chart::{
    chart_from_mg, complement_chart_from_mg, complement_moments, exact_chart, mg_matrix,
    moments_from_chart,
};
use mpchart::fixtures::fixture_graph;
use mpchart::graph::complement_t_matrix;

fn main() -> mpchart::Result<()> {
    let g = fixture_graph("paper-s4-example")?;
    let m = mg_matrix(&g)?;
    for (fixed, row) in m.rows().iter().enumerate() {
        let row: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("{fixed} fixed points: {}", row.join(" "));
    }
    let chart = chart_from_mg(&m);
    let compl = complement_chart_from_mg(&m);
    assert_eq!(compl, exact_chart(&g.complement())?);
    println!("H_G   {:?}", chart.normalized());
    println!("H_G^c {:?}", compl.normalized());

    let g = fixture_graph("paper-7v-g1")?;
    let predicted = complement_moments(&moments_from_chart(&exact_chart(&g)?), g.n())?;
    let actual = moments_from_chart(&exact_chart(&g.complement())?);
    println!(
        "complement mean {} variance {}",
        predicted.mean, predicted.variance
    );
    assert_eq!(predicted, actual);

    let tc = complement_t_matrix(&g.t_matrix(), &g.degree_profile(), &g);
    assert_eq!(tc, g.complement().t_matrix());
    println!("complement T-matrix row 0: {:?}", tc.rows()[0]);
    Ok(())
}
