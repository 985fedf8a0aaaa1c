//! Reading and writing graphs as edge lists, dense matrices and JSON.
//!
//! ```bash
//! cargo run -p mpchart --example graph_io
//! ```

use mpchart::{Graph, GraphFormat};

fn main() -> mpchart::Result<()> {
    let text = "# a path with a pendant\nn=5\n1 2\n2 3\n3 4\n2 5\n";
    let g = Graph::parse(text, GraphFormat::EdgeList)?;
    println!("{g:?}");

    for fmt in [GraphFormat::EdgeList, GraphFormat::Dense, GraphFormat::Json] {
        let out = g.serialize(fmt);
        assert_eq!(Graph::parse(&out, fmt)?, g);
        println!("--- {fmt:?}\n{}", out.trim_end());
    }

    let sub = g.induced_subgraph(&[0, 1, 2])?;
    println!("induced on 1..3: {sub:?}");
    println!("complement has {} edges", g.complement().edge_count());

    match Graph::parse("n=3\n1 1\n", GraphFormat::EdgeList) {
        Err(e) => println!("rejected: {e} (exit code {})", e.exit_code()),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
