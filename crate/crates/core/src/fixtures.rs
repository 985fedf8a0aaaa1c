//! Named graphs: small worked examples and three 20-vertex graphs for
//! convergence checks.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub n: usize,
    /// 1-based edge list.
    pub edges: &'static [(usize, usize)],
}

impl Fixture {
    pub fn graph(&self) -> Graph {
        Graph::from_labeled_edges(self.n, self.edges).expect("built-in fixture is valid")
    }
}

/// Hub 1 joined to 2..=10, hub 20 joined to 11..=19, and leaf `k + 9`
/// paired with leaf `k` for `k = 2..=10`.
#[rustfmt::skip]
const FIG4_EDGES: &[(usize, usize)] = &[
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10),
    (11, 20), (12, 20), (13, 20), (14, 20), (15, 20), (16, 20), (17, 20), (18, 20), (19, 20),
    (2, 11), (3, 12), (4, 13), (5, 14), (6, 15), (7, 16), (8, 17), (9, 18), (10, 19),
];

#[rustfmt::skip]
const FIG5_EDGES: &[(usize, usize)] = &[
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11),
    (11, 12), (12, 13), (13, 14), (14, 15), (15, 16), (16, 17), (17, 18), (18, 19), (19, 20),
    (20, 1),
    (1, 3), (3, 5), (5, 7), (7, 9), (9, 11), (11, 13), (13, 15), (15, 17), (17, 19), (19, 1),
    (2, 4), (4, 6), (6, 8), (8, 10), (10, 12), (12, 14), (14, 16), (16, 18), (18, 20), (20, 2),
];

/// 95 of the 190 possible edges on 20 vertices, drawn once uniformly at
/// random and frozen here.
#[rustfmt::skip]
const FIG6_EDGES: &[(usize, usize)] = &[
    (1, 4), (1, 5), (1, 7), (1, 9), (1, 10), (1, 13), (1, 14), (1, 15), (1, 17), (1, 18),
    (1, 19), (2, 4), (2, 6), (2, 7), (2, 8), (2, 11), (2, 14), (2, 15), (3, 4), (3, 6),
    (3, 10), (3, 11), (3, 12), (3, 14), (3, 15), (3, 16), (3, 19), (3, 20), (4, 9), (4, 13),
    (4, 15), (4, 16), (4, 17), (5, 9), (5, 14), (5, 15), (5, 16), (5, 18), (5, 19), (6, 8),
    (6, 9), (6, 11), (6, 15), (6, 16), (6, 18), (6, 20), (7, 9), (7, 10), (7, 12), (7, 13),
    (7, 14), (7, 15), (7, 17), (7, 19), (8, 11), (8, 12), (8, 17), (8, 18), (8, 19), (9, 10),
    (9, 11), (9, 12), (9, 15), (9, 17), (9, 18), (9, 20), (10, 14), (10, 15), (10, 16),
    (10, 17), (10, 19), (10, 20), (11, 12), (11, 14), (11, 16), (11, 18), (11, 19), (12, 14),
    (12, 16), (12, 17), (12, 18), (13, 15), (13, 16), (13, 17), (13, 19), (14, 16), (14, 19),
    (15, 17), (15, 18), (15, 20), (16, 19), (16, 20), (17, 18), (17, 19), (17, 20),
];

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "paper-5v-g1",
        description: "5 vertices, two consecutive edges 1-2-3 (chart 48,48,24,0,0,0)",
        n: 5,
        edges: &[(1, 2), (2, 3)],
    },
    Fixture {
        name: "paper-5v-g2",
        description: "5 vertices, two disjoint edges 1-2, 3-4 (chart 53,44,18,4,1,0)",
        n: 5,
        edges: &[(1, 2), (3, 4)],
    },
    Fixture {
        name: "paper-7v-g1",
        description: "7-vertex tree, equal mean/variance pair, first graph",
        n: 7,
        edges: &[(1, 3), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7)],
    },
    Fixture {
        name: "paper-7v-g2",
        description: "7-vertex tree, equal mean/variance pair, second graph",
        n: 7,
        edges: &[(1, 3), (2, 3), (3, 4), (3, 5), (5, 6), (2, 7)],
    },
    Fixture {
        name: "paper-ex26-g1",
        description: "4-cycle 1-2-3-4, max-plus permanent 4",
        n: 4,
        edges: &[(1, 2), (2, 3), (3, 4), (1, 4)],
    },
    Fixture {
        name: "paper-ex26-g2",
        description: "perfect matching 1-2, 3-4, an mp-maximal subgraph of the 4-cycle",
        n: 4,
        edges: &[(1, 2), (3, 4)],
    },
    Fixture {
        name: "paper-ex26-g3",
        description: "triangle 1-2-3 plus isolated vertex 4, max-plus permanent 3",
        n: 4,
        edges: &[(1, 2), (1, 3), (2, 3)],
    },
    Fixture {
        name: "paper-ex27-g1",
        description: "star 2-{4,5,6} plus isolated 1 and 3, max-plus permanent 2",
        n: 6,
        edges: &[(2, 4), (2, 5), (2, 6)],
    },
    Fixture {
        name: "paper-ex27-g2",
        description: "perfect matching 1-4, 2-5, 3-6, max-plus permanent 6",
        n: 6,
        edges: &[(1, 4), (2, 5), (3, 6)],
    },
    Fixture {
        name: "paper-s4-example",
        description: "4 vertices, edges 1-4, 2-3, 3-4; self-complementary up to relabelling",
        n: 4,
        edges: &[(1, 4), (2, 3), (3, 4)],
    },
    Fixture {
        name: "fig4-doublestar",
        description: "20 vertices, two 9-leaf stars with leaves paired by a matching, 27 edges",
        n: 20,
        edges: FIG4_EDGES,
    },
    Fixture {
        name: "fig5-circulant",
        description: "20-vertex circulant with distances {1, 2}, 40 edges, band structure",
        n: 20,
        edges: FIG5_EDGES,
    },
    Fixture {
        name: "fig6-random95",
        description: "20 vertices, 95 uniformly chosen edges (fixed stored instance)",
        n: 20,
        edges: FIG6_EDGES,
    },
];

pub fn list_fixtures() -> &'static [Fixture] {
    FIXTURES
}

pub fn fixture(name: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::BadFixture(name.to_string()))
}

pub fn fixture_graph(name: &str) -> Result<Graph> {
    fixture(name).map(Fixture::graph)
}
