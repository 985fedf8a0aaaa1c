//! Max-plus objects for undirected simple graphs.
//!
//! For a graph `G` with adjacency matrix `A`, every permutation `π` of the
//! vertices picks `S(π) = Σ_i A[i][π(i)]` ones out of `A`. This crate computes
//!
//! * the max-plus permanent `max_π S(π)` ([`permanent::mp_permanent`]), the
//!   t-terms and mp-maximal subgraphs that realise it, and the classical
//!   permanent for comparison;
//! * the mp-chart, the full histogram of `S(π)` over all `n!` permutations,
//!   exactly up to `n = 24` ([`chart::exact_chart`]) or by sampling
//!   ([`monte_carlo::sample_chart`]);
//! * closed-form mean and variance of the chart, the fixed-point/hit matrix
//!   `M_G`, and the corresponding formulas for the complement graph;
//! * the double-centred `R` matrix and normal-approximation diagnostics.
//!
//! ```
//! use mpchart::{chart, graph::Graph, permanent};
//!
//! let g = Graph::from_labeled_edges(5, &[(1, 2), (3, 4)]).unwrap();
//! assert_eq!(permanent::mp_permanent(&g), 4);
//! let h = chart::exact_chart(&g).unwrap();
//! let counts: Vec<String> = h.counts().iter().map(|c| c.to_string()).collect();
//! assert_eq!(counts, ["53", "44", "18", "4", "1", "0"]);
//! ```

pub mod chart;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod monte_carlo;
pub mod permanent;

pub use chart::{ChartMoments, MgMatrix, MpChart, RookNumbers};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, GraphFormat, TMatrix};
pub use monte_carlo::{CltReport, EmpiricalChart, HoeffdingR};
pub use permanent::{MpMaximalSubgraph, TTerm};
