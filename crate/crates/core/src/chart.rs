//! Exact mp-charts and their moments.
//!
//! `h_G(k)` counts permutations `π` with `Σ_i A[i][π(i)] = k`. These are the
//! hit numbers of the board of 1-cells of `A_G`, so the exact chart comes from
//! the rook numbers of that board:
//!
//! ```text
//! h(j) = Σ_{k ≥ j} (-1)^(k-j) C(k, j) r_k (n-k)!
//! ```
//!
//! Rook numbers are counted with a dynamic program over column subsets.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, PrimInt, Signed, ToPrimitive, Zero};
use serde::Serialize;

#[cfg(test)]
use crate::error::Error;
use crate::error::{ensure_cap, ensure_min, Result};
use crate::graph::{DegreeProfile, Graph, TMatrix};

/// Largest `n` for the rook-number DP (and therefore [`exact_chart`]).
pub const EXACT_CHART_CAP: usize = 24;
/// Largest `n` for full permutation enumeration.
pub const BRUTE_FORCE_CAP: usize = 10;
/// Largest `n` for the joint fixed-point/hit DP behind [`mg_matrix`].
pub const MG_DP_CAP: usize = 16;

/// `(h_G(0), ..., h_G(n))`. Always sums to `n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpChart {
    n: usize,
    counts: Vec<BigUint>,
}

impl MpChart {
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "a chart has n + 1 entries");
        MpChart {
            n: counts.len() - 1,
            counts,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, k: usize) -> &BigUint {
        &self.counts[k]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Chart divided by `n!`.
    pub fn normalized(&self) -> Vec<f64> {
        let total = BigRational::from_integer(self.total().into());
        self.counts
            .iter()
            .map(|c| {
                (BigRational::from_integer(BigInt::from(c.clone())) / &total)
                    .to_f64()
                    .unwrap_or(f64::NAN)
            })
            .collect()
    }

    /// Largest `k` with `h(k) > 0`.
    pub fn max_support(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            counts: Vec<String>,
            normalized: Vec<f64>,
        }
        serde_json::to_value(Repr {
            n: self.n,
            counts: self.counts.iter().map(BigUint::to_string).collect(),
            normalized: self.normalized(),
        })
        .expect("chart JSON")
    }
}

/// `r[k]` = number of ways to place `k` non-attacking rooks on the 1-cells
/// of `A_G`, i.e. the number of k-terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RookNumbers {
    pub r: Vec<u128>,
}

/// Rook numbers of the adjacency board.
///
/// Rows are processed in order; `dp[mask]` counts placements on the rows seen
/// so far whose occupied columns are exactly `mask`. For `n <= 20` every
/// `dp` entry is at most `20! < 2^64`, so the table uses `u64`; above that it
/// switches to `u128`.
pub fn rook_numbers(g: &Graph) -> Result<RookNumbers> {
    let n = g.n();
    ensure_cap("rook numbers", n, EXACT_CHART_CAP)?;
    let r = if n <= 20 {
        rook_dp::<u64>(g)
    } else {
        rook_dp::<u128>(g)
    };
    Ok(RookNumbers { r })
}

fn rook_dp<T: PrimInt + Into<u128>>(g: &Graph) -> Vec<u128> {
    let n = g.n();
    let size = 1usize << n;
    let mut dp = vec![T::zero(); size];
    dp[0] = T::one();
    for i in 0..n {
        let row = g.row(i);
        if row == 0 {
            continue;
        }
        // descending so that dp[mask ^ bit] still holds the previous row's value
        for mask in (1..size).rev() {
            let mut cand = row & mask as u64;
            if cand == 0 {
                continue;
            }
            let mut acc = dp[mask];
            while cand != 0 {
                let j = cand.trailing_zeros();
                acc = acc + dp[mask ^ (1usize << j)];
                cand &= cand - 1;
            }
            dp[mask] = acc;
        }
    }
    let mut r = vec![0u128; n + 1];
    for (mask, v) in dp.into_iter().enumerate() {
        r[mask.count_ones() as usize] += v.into();
    }
    r
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        f[k] = &f[k - 1] * k;
    }
    f
}

/// Exact chart via rook numbers and hit-number inclusion–exclusion.
pub fn exact_chart(g: &Graph) -> Result<MpChart> {
    let n = g.n();
    let rooks = rook_numbers(g)?;
    Ok(chart_from_rooks(n, &rooks))
}

/// Hit numbers from rook numbers. Panics if any count comes out negative,
/// which can only mean an arithmetic bug upstream.
pub fn chart_from_rooks(n: usize, rooks: &RookNumbers) -> MpChart {
    let fact = factorials(n);
    let binom: Vec<Vec<BigInt>> = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|j| binomial(BigInt::from(k), BigInt::from(j)))
                .collect()
        })
        .collect();
    let counts = (0..=n)
        .map(|j| {
            let mut h = BigInt::zero();
            for k in j..=n {
                if rooks.r[k] == 0 {
                    continue;
                }
                let term = &binom[k][j] * BigInt::from(rooks.r[k]) * &fact[n - k];
                if (k - j) % 2 == 0 {
                    h += term;
                } else {
                    h -= term;
                }
            }
            assert!(!h.is_negative(), "negative hit number h({j}) = {h}");
            h.to_biguint().expect("non-negative")
        })
        .collect();
    MpChart { n, counts }
}

/// Heap's algorithm; calls `visit` once per permutation of `0..n`.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Chart by enumerating all `n!` permutations.
pub fn brute_force_chart(g: &Graph) -> Result<MpChart> {
    let n = g.n();
    ensure_cap("brute-force chart", n, BRUTE_FORCE_CAP)?;
    let mut tally = vec![0u64; n + 1];
    for_each_permutation(n, |p| {
        let hits = p
            .iter()
            .enumerate()
            .filter(|&(i, &j)| g.has_edge(i, j))
            .count();
        tally[hits] += 1;
    });
    Ok(MpChart {
        n,
        counts: tally.into_iter().map(BigUint::from).collect(),
    })
}

/// Mean and variance of a chart viewed as a distribution on `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartMoments {
    pub mean: BigRational,
    pub variance: BigRational,
}

impl ChartMoments {
    pub fn mean_f64(&self) -> f64 {
        self.mean.to_f64().unwrap_or(f64::NAN)
    }

    pub fn variance_f64(&self) -> f64 {
        self.variance.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "mean": self.mean.to_string(),
            "variance": self.variance.to_string(),
            "mean_value": self.mean_f64(),
            "variance_value": self.variance_f64(),
        })
    }
}

fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `E(H_G) = 2ℓ_G / n`.
pub fn closed_form_mean(deg: &DegreeProfile, n: usize) -> Result<BigRational> {
    ensure_min("closed-form mean", n, 1)?;
    Ok(BigRational::new(
        BigInt::from(2 * deg.edge_count),
        BigInt::from(n),
    ))
}

/// `V(H_G) = Σ_i d_i(n - d_i)/n² + Σ_{i≠j} (d_i d_j - n T_ij) / (n²(n-1))`.
pub fn closed_form_variance(deg: &DegreeProfile, t: &TMatrix, n: usize) -> Result<BigRational> {
    ensure_min("closed-form variance", n, 2)?;
    let nn = n as i64;
    let d: Vec<i64> = deg.degrees.iter().map(|&x| x as i64).collect();
    let diag: i64 = d.iter().map(|&di| di * (nn - di)).sum();
    let mut off: i64 = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off += d[i] * d[j] - nn * t.get(i, j) as i64;
            }
        }
    }
    let n2 = rational(nn * nn);
    Ok(rational(diag) / &n2 + rational(off) / (n2 * rational(nn - 1)))
}

pub fn moments_from_chart(c: &MpChart) -> ChartMoments {
    let total = rational(c.total());
    let mut first = BigInt::zero();
    let mut second = BigInt::zero();
    for (k, count) in c.counts.iter().enumerate() {
        let count = BigInt::from(count.clone());
        first += &count * k;
        second += count * (k * k);
    }
    let mean = rational(first) / &total;
    let variance = rational(second) / &total - &mean * &mean;
    ChartMoments { mean, variance }
}

/// Moments of the complement's chart from those of the graph:
/// `E' = n - 1 - E` and `V' = V + 1 - 2E/(n-1)`.
pub fn complement_moments(mom: &ChartMoments, n: usize) -> Result<ChartMoments> {
    ensure_min("complement moments", n, 2)?;
    let n1 = rational(n as i64 - 1);
    let mean = &n1 - &mom.mean;
    let variance = &mom.variance + BigRational::one() - rational(2) * &mom.mean / n1;
    Ok(ChartMoments { mean, variance })
}

/// `m[i][j]` = number of permutations with exactly `i` fixed points and
/// exactly `j` adjacency hits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MgMatrix {
    n: usize,
    m: Vec<Vec<BigUint>>,
}

impl MgMatrix {
    pub fn from_rows(m: Vec<Vec<BigUint>>) -> Self {
        let n = m
            .len()
            .checked_sub(1)
            .expect("an M_G matrix has n + 1 rows");
        assert!(m.iter().all(|r| r.len() == n + 1), "M_G must be square");
        MgMatrix { n, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, fixed: usize, hits: usize) -> &BigUint {
        &self.m[fixed][hits]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.m
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let total = rational(self.m.iter().flatten().sum::<BigUint>());
        let counts: Vec<Vec<String>> = self
            .m
            .iter()
            .map(|r| r.iter().map(BigUint::to_string).collect())
            .collect();
        let normalized: Vec<Vec<f64>> = self
            .m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| (rational(c.clone()) / &total).to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect();
        serde_json::json!({ "n": self.n, "counts": counts, "normalized": normalized })
    }
}

/// `M_G`, by enumeration for `n <= 10` and by the joint rook DP up to `n <= 16`.
pub fn mg_matrix(g: &Graph) -> Result<MgMatrix> {
    if g.n() <= BRUTE_FORCE_CAP {
        mg_matrix_brute(g)
    } else {
        mg_matrix_dp(g)
    }
}

pub fn mg_matrix_brute(g: &Graph) -> Result<MgMatrix> {
    let n = g.n();
    ensure_cap("M_G enumeration", n, BRUTE_FORCE_CAP)?;
    let mut tally = vec![vec![0u64; n + 1]; n + 1];
    for_each_permutation(n, |p| {
        let fixed = p.iter().enumerate().filter(|&(i, &j)| i == j).count();
        let hits = p
            .iter()
            .enumerate()
            .filter(|&(i, &j)| g.has_edge(i, j))
            .count();
        tally[fixed][hits] += 1;
    });
    let m = tally
        .into_iter()
        .map(|r| r.into_iter().map(BigUint::from).collect())
        .collect();
    Ok(MgMatrix { n, m })
}

/// Joint rook placements on the adjacency board and the diagonal (the two
/// boards are disjoint), followed by two-variable inclusion–exclusion:
///
/// ```text
/// m[i][j] = Σ_{d ≥ i, a ≥ j} (-1)^(a-j+d-i) C(a, j) C(d, i) r[a][d] (n-a-d)!
/// ```
pub fn mg_matrix_dp(g: &Graph) -> Result<MgMatrix> {
    let n = g.n();
    ensure_cap("M_G joint DP", n, MG_DP_CAP)?;
    let size = 1usize << n;
    let width = n + 1;
    // dp[mask * width + d]: placements covering columns `mask`, `d` of them diagonal
    let mut dp = vec![0u128; size * width];
    dp[0] = 1;
    for i in 0..n {
        let row = g.row(i);
        let diag = 1usize << i;
        for mask in (1..size).rev() {
            let mut cand = row & mask as u64;
            let on_diag = mask & diag != 0;
            if cand == 0 && !on_diag {
                continue;
            }
            let base = mask * width;
            while cand != 0 {
                let j = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let src = (mask ^ (1 << j)) * width;
                for d in 0..width {
                    dp[base + d] += dp[src + d];
                }
            }
            if on_diag {
                let src = (mask ^ diag) * width;
                for d in 1..width {
                    dp[base + d] += dp[src + d - 1];
                }
            }
        }
    }
    // r[a][d]: a rooks on adjacency cells, d on the diagonal
    let mut r = vec![vec![0u128; width]; width];
    for mask in 0..size {
        let k = mask.count_ones() as usize;
        for d in 0..=k {
            r[k - d][d] += dp[mask * width + d];
        }
    }
    let fact = factorials(n);
    let binom = |a: usize, b: usize| binomial(BigInt::from(a), BigInt::from(b));
    let mut m = vec![vec![BigUint::zero(); width]; width];
    for (fixed, row) in m.iter_mut().enumerate() {
        for (hits, cell) in row.iter_mut().enumerate() {
            if fixed + hits > n {
                continue;
            }
            let mut acc = BigInt::zero();
            for d in fixed..=n {
                for a in hits..=(n - d) {
                    if r[a][d] == 0 {
                        continue;
                    }
                    let term =
                        binom(a, hits) * binom(d, fixed) * BigInt::from(r[a][d]) * &fact[n - a - d];
                    if (a - hits + d - fixed) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            assert!(!acc.is_negative(), "negative M_G entry ({fixed}, {hits})");
            *cell = acc.to_biguint().expect("non-negative");
        }
    }
    Ok(MgMatrix { n, m })
}

/// `h_G(j) = Σ_i m[i][j]`.
pub fn chart_from_mg(m: &MgMatrix) -> MpChart {
    let n = m.n;
    let counts = (0..=n).map(|j| (0..=n).map(|i| &m.m[i][j]).sum()).collect();
    MpChart { n, counts }
}

/// `h_{G^c}(j) = Σ_{i=0}^{n-j} m[i][n-j-i]`: a permutation with `i` fixed
/// points and `j'` hits in `G` has `n - i - j'` hits in the complement.
pub fn complement_chart_from_mg(m: &MgMatrix) -> MpChart {
    let n = m.n;
    let counts = (0..=n)
        .map(|j| (0..=(n - j)).map(|i| &m.m[i][n - j - i]).sum())
        .collect();
    MpChart { n, counts }
}
