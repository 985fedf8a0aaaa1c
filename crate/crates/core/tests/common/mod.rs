#![allow(dead_code)]

use mpchart::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with an edge probability drawn uniformly from [0.1, 0.9].
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Every permutation of `0..n` by recursive selection, independent of the
/// library's enumeration order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Chart oracle: tally of hits over all permutations.
pub fn oracle_chart(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut h = vec![0u64; n + 1];
    for p in all_permutations(n) {
        h[(0..n).filter(|&i| g.has_edge(i, p[i])).count()] += 1;
    }
    h
}

/// `max_π Σ A[i][π(i)]` by enumeration.
pub fn oracle_mp_permanent(g: &Graph) -> usize {
    let n = g.n();
    all_permutations(n)
        .into_iter()
        .map(|p| (0..n).filter(|&i| g.has_edge(i, p[i])).count())
        .max()
        .unwrap_or(0)
}

pub fn counts_u64(c: &mpchart::MpChart) -> Vec<u64> {
    use num_traits::ToPrimitive;
    c.counts().iter().map(|x| x.to_u64().unwrap()).collect()
}

pub fn factorial(n: usize) -> num_bigint::BigUint {
    (1..=n as u64).map(num_bigint::BigUint::from).product()
}

pub type Subgraph = (Vec<usize>, Vec<(usize, usize)>);

/// Minimum-edge subgraphs on `perm_mp` vertices that keep the max-plus
/// permanent, by trying every vertex subset and every edge subset of it.
pub fn oracle_maximal_subgraphs(g: &Graph) -> Vec<Subgraph> {
    let q = mpchart::permanent::mp_permanent(g);
    let n = g.n();
    let mut best = usize::MAX;
    let mut found = Vec::new();
    for vmask in 0u32..(1 << n) {
        if vmask.count_ones() as usize != q {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| vmask >> v & 1 == 1).collect();
        let local: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| vmask >> u & 1 == 1 && vmask >> v & 1 == 1)
            .collect();
        for emask in 0u32..(1 << local.len()) {
            let k = emask.count_ones() as usize;
            if k > best {
                continue;
            }
            let chosen: Vec<(usize, usize)> = (0..local.len())
                .filter(|&i| emask >> i & 1 == 1)
                .map(|i| local[i])
                .collect();
            let idx = |v: usize| verts.iter().position(|&w| w == v).unwrap();
            let relabelled: Vec<_> = chosen.iter().map(|&(u, v)| (idx(u), idx(v))).collect();
            let sub = Graph::from_edges(q, &relabelled).unwrap();
            if mpchart::permanent::mp_permanent(&sub) == q {
                if k < best {
                    best = k;
                    found.clear();
                }
                found.push((verts.clone(), chosen));
            }
        }
    }
    found.sort();
    found
}
