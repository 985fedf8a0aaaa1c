//! Max-plus permanent, classical permanent, t-terms and mp-maximal subgraphs.
//!
//! The max-plus permanent `max_π Σ_i A[i][π(i)]` of a 0/1 matrix is the size
//! of a maximum matching between rows and columns, so it is found with an
//! augmenting-path search instead of a scan over `n!` permutations.

use std::collections::BTreeSet;

use crate::error::{ensure_cap, Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`classical_permanent`].
pub const CLASSICAL_PERMANENT_CAP: usize = 30;

/// Largest `n` accepted by [`mp_maximal_subgraphs`].
pub const MAXIMAL_SUBGRAPH_CAP: usize = 12;

/// A row-to-column matching in the bipartite graph of 1-cells of `A_G`.
#[derive(Debug, Clone)]
pub struct RowMatching {
    row_to_col: Vec<Option<usize>>,
}

impl RowMatching {
    pub fn size(&self) -> usize {
        self.row_to_col.iter().filter(|c| c.is_some()).count()
    }

    pub fn col_of(&self, row: usize) -> Option<usize> {
        self.row_to_col[row]
    }

    /// The matching as a t-term ordered by row.
    pub fn to_term(&self) -> TTerm {
        TTerm::new(
            self.row_to_col
                .iter()
                .enumerate()
                .filter_map(|(i, c)| c.map(|j| (i, j)))
                .collect(),
        )
    }
}

/// Maximum-cardinality row/column matching. Greedy seeding, then Kuhn's
/// augmenting paths in increasing row order, so the result is deterministic.
pub fn max_row_matching(g: &Graph) -> RowMatching {
    let n = g.n();
    let mut row_to_col = vec![None; n];
    let mut col_to_row: Vec<Option<usize>> = vec![None; n];

    for (i, slot) in row_to_col.iter_mut().enumerate() {
        let mut cand = g.row(i);
        while cand != 0 {
            let j = cand.trailing_zeros() as usize;
            if col_to_row[j].is_none() {
                col_to_row[j] = Some(i);
                *slot = Some(j);
                break;
            }
            cand &= cand - 1;
        }
    }

    for i in 0..n {
        if row_to_col[i].is_none() {
            let mut visited = 0u64;
            augment(g, i, &mut visited, &mut row_to_col, &mut col_to_row);
        }
    }
    RowMatching { row_to_col }
}

fn augment(
    g: &Graph,
    row: usize,
    visited: &mut u64,
    row_to_col: &mut [Option<usize>],
    col_to_row: &mut [Option<usize>],
) -> bool {
    let mut cand = g.row(row) & !*visited;
    while cand != 0 {
        let j = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if *visited >> j & 1 == 1 {
            continue;
        }
        *visited |= 1 << j;
        let free = match col_to_row[j] {
            None => true,
            Some(other) => augment(g, other, visited, row_to_col, col_to_row),
        };
        if free {
            col_to_row[j] = Some(row);
            row_to_col[row] = Some(j);
            return true;
        }
    }
    false
}

/// `perm_mp(A_G)`: the largest number of ones a single permutation can pick.
pub fn mp_permanent(g: &Graph) -> usize {
    max_row_matching(g).size()
}

/// Ordinary permanent of `A_G` by Ryser's formula with a Gray-code walk.
///
/// The signed partial sums are accumulated modulo `2^128`. Only ring
/// operations are used and the final value is at most `30! < 2^127`, so the
/// wrapped result is the exact permanent.
pub fn classical_permanent(g: &Graph) -> Result<u128> {
    let n = g.n();
    ensure_cap("classical permanent", n, CLASSICAL_PERMANENT_CAP)?;
    if n == 0 {
        return Ok(1);
    }
    // column j of A as a bitset over rows; A is symmetric so it equals row j
    let mut row_sums = vec![0i64; n];
    let mut subset = 0u64;
    let mut total: i128 = 0;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let bit = 1u64 << j;
        let delta = if subset & bit == 0 { 1 } else { -1 };
        subset ^= bit;
        let mut col = g.row(j);
        while col != 0 {
            let i = col.trailing_zeros() as usize;
            row_sums[i] += delta;
            col &= col - 1;
        }
        let mut prod: i128 = 1;
        for &s in &row_sums {
            if s == 0 {
                prod = 0;
                break;
            }
            prod = prod.wrapping_mul(s as i128);
        }
        if subset.count_ones() % 2 == 1 {
            total = total.wrapping_sub(prod);
        } else {
            total = total.wrapping_add(prod);
        }
    }
    if n % 2 == 1 {
        total = total.wrapping_neg();
    }
    debug_assert!(total >= 0);
    Ok(total as u128)
}

/// Checks `perm_mp(A_G) = n  <=>  perm(A_G) > 0` for one graph.
pub fn check_mp_perm_equivalence(g: &Graph) -> Result<bool> {
    let classical_positive = classical_permanent(g)? > 0;
    let mp_full = mp_permanent(g) == g.n();
    Ok(mp_full == classical_positive)
}

/// A sequence of non-attacking 1-cells `(i_1, j_1) .. (i_t, j_t)`:
/// strictly increasing rows, distinct columns, every cell a 1 of `A_G`.
/// Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TTerm {
    pub pairs: Vec<(usize, usize)>,
}

impl TTerm {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        TTerm { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `I(P)` as a bitset.
    pub fn row_set(&self) -> u64 {
        self.pairs.iter().fold(0, |m, &(i, _)| m | 1 << i)
    }

    /// `J(P)` as a bitset.
    pub fn col_set(&self) -> u64 {
        self.pairs.iter().fold(0, |m, &(_, j)| m | 1 << j)
    }
}

pub fn is_t_term(g: &Graph, candidate: &TTerm) -> bool {
    let n = g.n();
    let rows_increasing = candidate.pairs.windows(2).all(|w| w[0].0 < w[1].0);
    let mut cols = 0u64;
    for &(i, j) in &candidate.pairs {
        if i >= n || j >= n || !g.has_edge(i, j) || cols >> j & 1 == 1 {
            return false;
        }
        cols |= 1 << j;
    }
    rows_increasing
}

/// A maximum-length t-term `P` with `I(P) = J(P)`.
///
/// Starts from a maximum matching. While some row `i_k` of the remaining
/// term is not a column of it, its column `j_k` must be a row `i_s`
/// (otherwise `(j_k, i_k)` would extend the term); `(i_s, j_s)` is swapped
/// for `(j_k, i_k)`, the 2-cycle on `{i_k, j_k}` is set aside and the rest is
/// treated the same way.
pub fn symmetric_max_term(g: &Graph) -> Result<TTerm> {
    let matching = max_row_matching(g);
    if matching.size() == 0 {
        return Err(Error::NoTerm);
    }
    let mut rest: Vec<(usize, usize)> = matching.to_term().pairs;
    let mut done: Vec<(usize, usize)> = Vec::with_capacity(rest.len());
    loop {
        let rows = rest.iter().fold(0u64, |m, &(i, _)| m | 1 << i);
        let cols = rest.iter().fold(0u64, |m, &(_, j)| m | 1 << j);
        let unmatched = rows & !cols;
        if unmatched == 0 {
            break;
        }
        let ik = unmatched.trailing_zeros() as usize;
        let k = rest
            .iter()
            .position(|&(i, _)| i == ik)
            .expect("row in term");
        let (_, jk) = rest[k];
        let s = rest
            .iter()
            .position(|&(i, _)| i == jk)
            .expect("column of an unmatched row is a row of a maximum term");
        done.push((ik, jk));
        done.push((jk, ik));
        let (hi, lo) = if k > s { (k, s) } else { (s, k) };
        rest.swap_remove(hi);
        rest.swap_remove(lo);
    }
    done.extend(rest);
    done.sort_unstable();
    Ok(TTerm::new(done))
}

/// A subgraph on `perm_mp(A_G)` vertices that still reaches that max-plus
/// permanent with as few edges as possible. Indices refer to the parent graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MpMaximalSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl MpMaximalSubgraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The subgraph on its own vertex set, relabelled `0..q` in increasing order.
    pub fn to_graph(&self) -> Graph {
        let index = |v: usize| {
            self.vertices
                .binary_search(&v)
                .expect("edge endpoint in subgraph")
        };
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (index(u), index(v)))
            .collect();
        Graph::from_edges(self.vertices.len(), &edges).expect("subgraph of a valid graph")
    }

    pub fn shares_vertex_with(&self, other: &MpMaximalSubgraph) -> bool {
        self.vertices
            .iter()
            .any(|v| other.vertices.binary_search(v).is_ok())
    }
}

/// Every mp-maximal subgraph, ordered by vertex set then edge set.
///
/// A subgraph on `q` vertices with max-plus permanent `q` contains a
/// spanning family of disjoint edges (2-cycles) and longer cycles, and that
/// family alone already qualifies. So the search runs over such covers of
/// every `q`-subset, keeping those with the fewest edges.
pub fn mp_maximal_subgraphs(g: &Graph) -> Result<Vec<MpMaximalSubgraph>> {
    ensure_cap("mp-maximal subgraph search", g.n(), MAXIMAL_SUBGRAPH_CAP)?;
    let q = mp_permanent(g);
    if q == 0 {
        return Err(Error::NoTerm);
    }
    let mut search = CoverSearch {
        g,
        best: usize::MAX,
        found: BTreeSet::new(),
        edges: Vec::new(),
        current_vertices: 0,
    };
    for mask in 0u64..(1u64 << g.n()) {
        if mask.count_ones() as usize == q {
            search.current_vertices = mask;
            search.cover(mask);
        }
    }
    Ok(search.found.into_iter().collect())
}

struct CoverSearch<'g> {
    g: &'g Graph,
    best: usize,
    found: BTreeSet<MpMaximalSubgraph>,
    edges: Vec<(usize, usize)>,
    current_vertices: u64,
}

impl CoverSearch<'_> {
    fn cover(&mut self, remaining: u64) {
        if remaining == 0 {
            self.record();
            return;
        }
        if self
            .edges
            .len()
            .saturating_add(min_cover_edges(remaining.count_ones() as usize))
            > self.best
        {
            return;
        }
        let v = remaining.trailing_zeros() as usize;
        let rest = remaining & !(1u64 << v);

        let mut partners = self.g.row(v) & rest;
        while partners != 0 {
            let u = partners.trailing_zeros() as usize;
            partners &= partners - 1;
            self.edges.push((v, u));
            self.cover(rest & !(1u64 << u));
            self.edges.pop();
        }

        let mut path = vec![v];
        self.extend_cycle(&mut path, rest);
    }

    /// Grows a simple path from `path[0]` through `avail`, closing it into a
    /// cycle of length >= 3 whenever possible. Each cycle is visited in one
    /// direction only (second vertex smaller than the last).
    fn extend_cycle(&mut self, path: &mut Vec<usize>, avail: u64) {
        if self.edges.len() + path.len() + 1 > self.best {
            return;
        }
        let start = path[0];
        let last = *path.last().expect("non-empty path");
        let mut next = self.g.row(last) & avail;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(w);
            let avail_w = avail & !(1u64 << w);
            if path.len() >= 3 && self.g.has_edge(w, start) && path[1] < w {
                let before = self.edges.len();
                for pair in path.windows(2) {
                    self.edges.push((pair[0], pair[1]));
                }
                self.edges.push((w, start));
                self.cover(avail_w);
                self.edges.truncate(before);
            }
            self.extend_cycle(path, avail_w);
            path.pop();
        }
    }

    fn record(&mut self) {
        let count = self.edges.len();
        if count > self.best {
            return;
        }
        if count < self.best {
            self.best = count;
            self.found.clear();
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        let vertices = bits(self.current_vertices).collect();
        self.found.insert(MpMaximalSubgraph { vertices, edges });
    }
}

/// Fewest edges any cover of `r` vertices can use.
fn min_cover_edges(r: usize) -> usize {
    match r {
        0 => 0,
        1 => usize::MAX / 2,
        r if r % 2 == 0 => r / 2,
        r => (r + 3) / 2,
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
