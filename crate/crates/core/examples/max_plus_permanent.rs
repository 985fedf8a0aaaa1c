//! Max-plus permanent, a symmetric maximal term, and the mp-maximal
//! subgraphs of a few small graphs.
//!
//! ```bash
//! cargo run -p mpchart --example max_plus_permanent
//! ```

use mpchart::fixtures::fixture_graph;
use mpchart::permanent::{
    classical_permanent, mp_maximal_subgraphs, mp_permanent, symmetric_max_term,
};

fn main() -> mpchart::Result<()> {
    for name in [
        "paper-ex26-g1",
        "paper-ex26-g3",
        "paper-ex27-g1",
        "paper-ex27-g2",
    ] {
        let g = fixture_graph(name)?;
        println!(
            "{name}: perm_mp = {}, classical permanent = {}",
            mp_permanent(&g),
            classical_permanent(&g)?
        );
        let term = symmetric_max_term(&g)?;
        let pairs: Vec<_> = term
            .pairs
            .iter()
            .map(|&(i, j)| format!("({},{})", i + 1, j + 1))
            .collect();
        println!("  symmetric term {}", pairs.join(" "));
        for s in mp_maximal_subgraphs(&g)? {
            let edges: Vec<_> = s
                .edges
                .iter()
                .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
                .collect();
            println!(
                "  mp-maximal subgraph on {:?}: {}",
                s.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                edges.join(", ")
            );
        }
    }
    Ok(())
}
