//! Undirected simple graphs stored as one adjacency bitset per vertex.
//!
//! Vertices are 0-based everywhere in the library API. Text formats and
//! [`Graph::from_labeled_edges`] use 1-based labels.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold; one row fits a `u64`.
pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph: symmetric 0/1 adjacency, zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (u + 1, v + 1))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Vertex degrees together with the edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub edge_count: usize,
}

/// Common-neighbour counts: entry `(i, j)` is the inner product of rows `i`
/// and `j` of the adjacency matrix, so the diagonal holds the degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMatrix {
    n: usize,
    t: Vec<usize>,
}

impl TMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.t[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.t
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[usize]>::to_vec)
            .collect()
    }
}

/// Text formats accepted by [`Graph::parse`] and produced by [`Graph::serialize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// `n=<int>` then one `<u> <v>` pair per line; `#` starts a comment.
    EdgeList,
    /// `n` lines of `n` whitespace-separated `0`/`1` tokens.
    Dense,
    /// `{"n": int, "edges": [[u, v], ...]}`.
    Json,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "dense" | "dense-matrix" | "matrix" => Ok(GraphFormat::Dense),
            "json" => Ok(GraphFormat::Json),
            other => Err(format!(
                "unknown graph format {other:?} (edge-list, dense, json)"
            )),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[i64; 2]>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        crate::error::ensure_cap("graph", n, MAX_VERTICES)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Circulant graph: `i ~ j` whenever the cyclic distance between them is in `distances`.
    pub fn circulant(n: usize, distances: &[usize]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            for &d in distances {
                let d = d % n.max(1);
                if d != 0 {
                    g.insert_edge(i, (i + d) % n);
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph from 0-based edge pairs. Duplicates are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u as i64 + 1, v as i64 + 1)?;
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge pairs, the labelling used in all text I/O.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u as i64, v as i64)?;
            g.insert_edge(u - 1, v - 1);
        }
        Ok(g)
    }

    /// Builds a graph from a dense 0/1 matrix, rejecting loops and asymmetry.
    pub fn from_dense(matrix: &[Vec<u8>]) -> Result<Self> {
        let n = matrix.len();
        let mut g = Graph::empty(n)?;
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if i == j => return Err(Error::LoopRejected { vertex: i + 1 }),
                    1 => g.rows[i] |= 1 << j,
                    other => {
                        return Err(Error::BadEntry {
                            line: i + 1,
                            token: other.to_string(),
                        })
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if g.has_edge(i, j) != g.has_edge(j, i) {
                    return Err(Error::AsymmetryRejected {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(g)
    }

    fn check_pair(&self, u: i64, v: i64) -> Result<()> {
        for w in [u, v] {
            if w < 1 || w as u64 > self.n as u64 {
                return Err(Error::BadVertex {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::LoopRejected { vertex: u as usize });
        }
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency bitset of vertex `i`: bit `j` is set iff `i ~ j`.
    #[inline]
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.rows[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Complement on the same vertex set: distinct `i, j` are adjacent iff
    /// they are not adjacent here. The diagonal stays zero.
    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        let rows = (0..self.n)
            .map(|i| !self.rows[i] & full & !(1u64 << i))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Block-diagonal union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        crate::error::ensure_cap("disjoint union", n, MAX_VERTICES)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Subgraph induced by the given 0-based vertices, relabelled in increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&bad) = vs.iter().find(|&&v| v >= self.n) {
            return Err(Error::BadVertex {
                vertex: bad as i64 + 1,
                n: self.n,
            });
        }
        let mut g = Graph::empty(vs.len())?;
        for (a, &u) in vs.iter().enumerate() {
            for (b, &v) in vs.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.rows[a] |= 1 << b;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices so that old vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "relabel: permutation length mismatch");
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, rows }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|i| self.degree(i)).collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        DegreeProfile {
            degrees,
            edge_count,
        }
    }

    pub fn t_matrix(&self) -> TMatrix {
        let n = self.n;
        let mut t = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                t[i * n + j] = (self.rows[i] & self.rows[j]).count_ones() as usize;
            }
        }
        TMatrix { n, t }
    }

    pub fn dense_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.has_edge(i, j) as u8).collect())
            .collect()
    }

    pub fn parse(text: &str, format: GraphFormat) -> Result<Graph> {
        match format {
            GraphFormat::EdgeList => parse_edge_list(text),
            GraphFormat::Dense => parse_dense(text),
            GraphFormat::Json => parse_json(text),
        }
    }

    pub fn serialize(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::EdgeList => {
                let mut s = format!("n={}\n", self.n);
                for (u, v) in self.edges() {
                    let _ = writeln!(s, "{} {}", u + 1, v + 1);
                }
                s
            }
            GraphFormat::Dense => {
                let mut s = String::new();
                for row in self.dense_matrix() {
                    let line: Vec<String> = row.iter().map(u8::to_string).collect();
                    s.push_str(&line.join(" "));
                    s.push('\n');
                }
                s
            }
            GraphFormat::Json => serde_json::to_string(&self.to_json_value())
                .expect("graph JSON serialization cannot fail"),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let edges = self
            .edges()
            .into_iter()
            .map(|(u, v)| [u as i64 + 1, v as i64 + 1])
            .collect();
        serde_json::to_value(JsonGraph { n: self.n, edges }).expect("graph JSON")
    }
}

/// Common-neighbour counts of the complement, evaluated without building it:
/// `Tc[i][j] = T[i][j] + n - 2 - d_i - d_j + a_ij + a_ji` for `i != j`,
/// and `Tc[i][i] = n - 1 - d_i`.
pub fn complement_t_matrix(t: &TMatrix, deg: &DegreeProfile, g: &Graph) -> TMatrix {
    let n = g.n();
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = if i == j {
                n - 1 - deg.degrees[i]
            } else {
                let v = t.get(i, j) as i64 + n as i64
                    - 2
                    - deg.degrees[i] as i64
                    - deg.degrees[j] as i64
                    + g.has_edge(i, j) as i64
                    + g.has_edge(j, i) as i64;
                debug_assert!(v >= 0);
                v as usize
            };
        }
    }
    TMatrix { n, t: out }
}

#[inline]
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_int(tok: &str, line: usize) -> Result<i64> {
    tok.parse::<i64>().map_err(|_| Error::Parse {
        line,
        message: format!("expected an integer, found {tok:?}"),
    })
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n=<int>` header".into(),
    })?;
    let n_text = header
        .strip_prefix('n')
        .map(str::trim_start)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected `n=<int>`, found {header:?}"),
        })?;
    let n = parse_int(n_text.trim(), line_no)?;
    if n < 0 {
        return Err(Error::Parse {
            line: line_no,
            message: "negative vertex count".into(),
        });
    }
    let mut g = Graph::empty(n as usize)?;
    for (line_no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `<u> <v>`, found {line:?}"),
            });
        }
        let u = parse_int(toks[0], line_no)?;
        let v = parse_int(toks[1], line_no)?;
        g.check_pair(u, v)?;
        g.insert_edge(u as usize - 1, v as usize - 1);
    }
    Ok(g)
}

fn parse_dense(text: &str) -> Result<Graph> {
    let mut matrix = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = strip_comment(line);
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| match tok {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                other => Err(Error::BadEntry {
                    line: i + 1,
                    token: other.to_string(),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        matrix.push(row);
    }
    Graph::from_dense(&matrix)
}

fn parse_json(text: &str) -> Result<Graph> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut g = Graph::empty(raw.n)?;
    for [u, v] in raw.edges {
        g.check_pair(u, v)?;
        g.insert_edge(u as usize - 1, v as usize - 1);
    }
    Ok(g)
}
