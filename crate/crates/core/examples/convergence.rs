//! Sampled and exact mp-charts of the three 20-vertex convergence graphs,
//! compared with the normal law of the same mean and variance.
//!
//! ```bash
//! cargo run --release -p mpchart --example convergence
//! ```

use std::time::Instant;

use mpchart::chart::exact_chart;
use mpchart::fixtures::fixture_graph;
use mpchart::monte_carlo::{clt_report, sample_chart};

fn main() -> mpchart::Result<()> {
    for name in ["fig4-doublestar", "fig5-circulant", "fig6-random95"] {
        let g = fixture_graph(name)?;
        let sampled = sample_chart(&g, 100_000, 7)?;
        let rep = clt_report(&g, &sampled)?;
        println!(
            "{name}: E = {} ({:.4}) observed {:.4} ± {:.4}, V = {} ({:.4}) observed {:.4}",
            rep.mean_exact,
            rep.mean_exact_f64(),
            rep.mean_emp,
            rep.mean_standard_error().unwrap_or(0.0),
            rep.var_exact,
            rep.var_exact_f64(),
            rep.var_emp,
        );
        println!(
            "  sampled KS distance {:.4}, Hoeffding ratio {:.4}",
            rep.ks_distance, rep.hoeffding_ratio
        );

        let start = Instant::now();
        let exact = exact_chart(&g)?;
        let exact_rep = clt_report(&g, &exact)?;
        println!(
            "  exact chart in {:.2?}: KS distance {:.4}, support up to {}",
            start.elapsed(),
            exact_rep.ks_distance,
            exact.max_support()
        );
    }
    Ok(())
}
