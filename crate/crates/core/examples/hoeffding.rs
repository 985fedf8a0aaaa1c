//! Hoeffding's R matrix: variance by a second route and the ratio that
//! controls the normal approximation.
//!
//! ```bash
//! cargo run -p mpchart --example hoeffding
//! ```

use mpchart::monte_carlo::{hoeffding_r, hoeffding_ratio, variance_via_r};
use mpchart::Graph;

fn main() -> mpchart::Result<()> {
    for n in [5, 10, 20, 40] {
        let g = Graph::circulant(n, &[1])?;
        let r = hoeffding_r(&g)?;
        println!(
            "cycle C{n}: variance {} ratio {:.4} R[0][1] = {}",
            variance_via_r(&r),
            hoeffding_ratio(&g)?,
            r.get(0, 1)
        );
    }
    let k = Graph::complete(8)?;
    println!("K8 variance {}", variance_via_r(&hoeffding_r(&k)?));
    Ok(())
}
