//! Sampled mp-charts and normal-approximation diagnostics.
//!
//! Random permutations come from a Fisher–Yates shuffle driven by
//! `ChaCha8Rng`. Draws are split into fixed chunks of [`CHUNK_SIZE`]; chunk
//! `c` uses the generator seeded with the master seed on stream `c`, so the
//! tallies depend only on `(seed, samples)` and never on the worker count.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{Continuous, ContinuousCDF, Normal};

use crate::chart::{closed_form_mean, closed_form_variance, MpChart};
use crate::error::{ensure_min, Error, Result};
use crate::graph::Graph;

/// Permutations drawn per independently seeded chunk.
pub const CHUNK_SIZE: u64 = 8192;

/// Tally of `S_n(π)` over sampled permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmpiricalChart {
    pub n: usize,
    pub freqs: Vec<u64>,
    pub samples: u64,
    pub seed: u64,
}

impl EmpiricalChart {
    pub fn normalized(&self) -> Vec<f64> {
        self.freqs
            .iter()
            .map(|&f| f as f64 / self.samples as f64)
            .collect()
    }

    pub fn mean(&self) -> f64 {
        self.moments().0
    }

    /// Population variance of the sample.
    pub fn variance(&self) -> f64 {
        self.moments().1
    }

    fn moments(&self) -> (f64, f64) {
        let s = self.samples as f64;
        let (m1, m2) = self
            .freqs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(a, b), (k, &f)| {
                let k = k as f64;
                (a + k * f as f64, b + k * k * f as f64)
            });
        let mean = m1 / s;
        (mean, m2 / s - mean * mean)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "freqs": self.freqs,
            "samples": self.samples,
            "seed": self.seed,
            "normalized": self.normalized(),
        })
    }
}

/// Samples with the global rayon pool.
pub fn sample_chart(g: &Graph, samples: u64, seed: u64) -> Result<EmpiricalChart> {
    sample_chunks(g, samples, seed)
}

/// Samples on a dedicated pool of `workers` threads. The result is identical
/// for every `workers >= 1`.
pub fn sample_chart_with_workers(
    g: &Graph,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<EmpiricalChart> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    pool.install(|| sample_chunks(g, samples, seed))
}

fn sample_chunks(g: &Graph, samples: u64, seed: u64) -> Result<EmpiricalChart> {
    if samples == 0 {
        return Err(Error::BadSampleCount);
    }
    let n = g.n();
    let chunks = samples.div_ceil(CHUNK_SIZE);
    let freqs = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let len = CHUNK_SIZE.min(samples - c * CHUNK_SIZE);
            sample_one_chunk(g, seed, c, len)
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(EmpiricalChart {
        n,
        freqs,
        samples,
        seed,
    })
}

fn sample_one_chunk(g: &Graph, seed: u64, chunk: u64, len: u64) -> Vec<u64> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut tally = vec![0u64; n + 1];
    for _ in 0..len {
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        let hits = perm
            .iter()
            .enumerate()
            .filter(|&(i, &j)| g.has_edge(i, j))
            .count();
        tally[hits] += 1;
    }
    tally
}

/// Double-centred adjacency matrix
/// `R_ij = A_ij - d_i/n - d_j/n + (Σ A)/n²`, stored as the integers `n² R_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoeffdingR {
    n: usize,
    scaled: Vec<i64>,
}

impl HoeffdingR {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `n² R_ij`.
    pub fn scaled(&self, i: usize, j: usize) -> i64 {
        self.scaled[i * self.n + j]
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        let n2 = (self.n * self.n) as i64;
        BigRational::new(self.scaled(i, j).into(), n2.into())
    }

    pub fn get_f64(&self, i: usize, j: usize) -> f64 {
        self.scaled(i, j) as f64 / (self.n * self.n) as f64
    }

    fn sum_of_squares_scaled(&self) -> i128 {
        self.scaled.iter().map(|&x| (x as i128) * (x as i128)).sum()
    }
}

pub fn hoeffding_r(g: &Graph) -> Result<HoeffdingR> {
    let n = g.n();
    ensure_min("Hoeffding R matrix", n, 2)?;
    let deg = g.degree_profile();
    let total = 2 * deg.edge_count as i64;
    let nn = n as i64;
    let mut scaled = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let a = g.has_edge(i, j) as i64;
            scaled[i * n + j] =
                nn * nn * a - nn * deg.degrees[i] as i64 - nn * deg.degrees[j] as i64 + total;
        }
    }
    Ok(HoeffdingR { n, scaled })
}

/// `V(S_n) = Σ R_ij² / (n - 1)`, exactly.
pub fn variance_via_r(r: &HoeffdingR) -> BigRational {
    let n = r.n as i64;
    let num = BigInt::from(r.sum_of_squares_scaled());
    let den = BigInt::from(n).pow(4) * BigInt::from(n - 1);
    BigRational::new(num, den)
}

/// Floating-point evaluation of [`variance_via_r`] from the `f64` entries.
pub fn variance_via_r_f64(r: &HoeffdingR) -> f64 {
    let n = r.n;
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let x = r.get_f64(i, j);
            sum += x * x;
        }
    }
    sum / (n as f64 - 1.0)
}

/// `max R_ij² / ((1/n) Σ R_ij²)`; small values support the normal approximation.
pub fn hoeffding_ratio(g: &Graph) -> Result<f64> {
    let r = hoeffding_r(g)?;
    let sum = r.sum_of_squares_scaled();
    if sum == 0 {
        return Err(Error::DegenerateVariance);
    }
    let max = r
        .scaled
        .iter()
        .map(|&x| (x as i128) * (x as i128))
        .max()
        .unwrap_or(0);
    Ok(r.n as f64 * max as f64 / sum as f64)
}

/// Anything that can be read as a probability vector on `0..=n`.
pub trait ChartDistribution {
    fn n(&self) -> usize;
    fn probabilities(&self) -> Vec<f64>;
    fn sample_count(&self) -> Option<u64> {
        None
    }
}

impl ChartDistribution for MpChart {
    fn n(&self) -> usize {
        MpChart::n(self)
    }

    fn probabilities(&self) -> Vec<f64> {
        self.normalized()
    }
}

impl ChartDistribution for EmpiricalChart {
    fn n(&self) -> usize {
        self.n
    }

    fn probabilities(&self) -> Vec<f64> {
        self.normalized()
    }

    fn sample_count(&self) -> Option<u64> {
        Some(self.samples)
    }
}

/// Exact and observed moments of a chart plus its distance to the matching normal law.
#[derive(Debug, Clone, PartialEq)]
pub struct CltReport {
    pub n: usize,
    pub samples: Option<u64>,
    pub mean_exact: BigRational,
    pub var_exact: BigRational,
    pub mean_emp: f64,
    pub var_emp: f64,
    /// `max_c |F(c) - Φ((c - E)/σ)|` over half-integer cut points `c`.
    pub ks_distance: f64,
    pub hoeffding_ratio: f64,
}

impl CltReport {
    pub fn mean_exact_f64(&self) -> f64 {
        self.mean_exact.to_f64().unwrap_or(f64::NAN)
    }

    pub fn var_exact_f64(&self) -> f64 {
        self.var_exact.to_f64().unwrap_or(f64::NAN)
    }

    /// `sqrt(V / samples)`, or `None` for an exact chart.
    pub fn mean_standard_error(&self) -> Option<f64> {
        self.samples
            .map(|s| (self.var_exact_f64() / s as f64).sqrt())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "samples": self.samples,
            "mean_exact": self.mean_exact.to_string(),
            "var_exact": self.var_exact.to_string(),
            "mean_exact_value": self.mean_exact_f64(),
            "var_exact_value": self.var_exact_f64(),
            "mean_emp": self.mean_emp,
            "var_emp": self.var_emp,
            "ks_distance": self.ks_distance,
            "hoeffding_ratio": self.hoeffding_ratio,
        })
    }
}

fn normal_for(g: &Graph) -> Result<(BigRational, BigRational, Normal)> {
    let n = g.n();
    ensure_min("CLT report", n, 2)?;
    let deg = g.degree_profile();
    let mean = closed_form_mean(&deg, n)?;
    let var = closed_form_variance(&deg, &g.t_matrix(), n)?;
    if var.is_zero() {
        return Err(Error::DegenerateVariance);
    }
    let normal = Normal::new(mean.to_f64().unwrap(), var.to_f64().unwrap().sqrt())
        .map_err(|_| Error::DegenerateVariance)?;
    Ok((mean, var, normal))
}

pub fn clt_report(g: &Graph, chart: &dyn ChartDistribution) -> Result<CltReport> {
    if chart.n() != g.n() {
        return Err(Error::ChartMismatch {
            chart: chart.n(),
            graph: g.n(),
        });
    }
    let (mean_exact, var_exact, normal) = normal_for(g)?;
    let p = chart.probabilities();
    let (m1, m2) = p.iter().enumerate().fold((0.0, 0.0), |(a, b), (k, &pk)| {
        let k = k as f64;
        (a + k * pk, b + k * k * pk)
    });
    Ok(CltReport {
        n: g.n(),
        samples: chart.sample_count(),
        mean_exact,
        var_exact,
        mean_emp: m1,
        var_emp: m2 - m1 * m1,
        ks_distance: ks_distance(&p, &normal),
        hoeffding_ratio: hoeffding_ratio(g)?,
    })
}

/// Sup gap between the CDF of `p` and `normal` at the cut points
/// `-1/2, 1/2, ..., n + 1/2`.
pub fn ks_distance(p: &[f64], normal: &Normal) -> f64 {
    let mut cdf = 0.0;
    let mut worst = normal.cdf(-0.5).abs();
    for (k, &pk) in p.iter().enumerate() {
        cdf += pk;
        worst = worst.max((cdf - normal.cdf(k as f64 + 0.5)).abs());
    }
    worst.min(1.0)
}

/// One row of the normal-comparison plot data.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotRow {
    pub k: usize,
    pub frequency: f64,
    pub normal_density: f64,
    pub empirical_cdf: f64,
    pub normal_cdf: f64,
}

/// Rows `(k, normalized frequency, normal density at k, CDF at k, Φ at k + 1/2)`.
pub fn plot_rows(g: &Graph, chart: &dyn ChartDistribution) -> Result<Vec<PlotRow>> {
    if chart.n() != g.n() {
        return Err(Error::ChartMismatch {
            chart: chart.n(),
            graph: g.n(),
        });
    }
    let (_, _, normal) = normal_for(g)?;
    let mut cdf = 0.0;
    Ok(chart
        .probabilities()
        .into_iter()
        .enumerate()
        .map(|(k, pk)| {
            cdf += pk;
            PlotRow {
                k,
                frequency: pk,
                normal_density: normal.pdf(k as f64),
                empirical_cdf: cdf,
                normal_cdf: normal.cdf(k as f64 + 0.5),
            }
        })
        .collect())
}

pub fn plot_csv(rows: &[PlotRow]) -> String {
    let mut out = String::from("k,frequency,normal_density,empirical_cdf,normal_cdf\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.k, r.frequency, r.normal_density, r.empirical_cdf, r.normal_cdf
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::exact_chart;
    use num_traits::One;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_labeled_edges(n, edges).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn empty_graph_samples_are_all_zero() {
        let e = sample_chart(&Graph::empty(6).unwrap(), 1000, 3).unwrap();
        assert_eq!(e.freqs, vec![1000, 0, 0, 0, 0, 0, 0]);
        assert_eq!(e.samples, 1000);
    }

    #[test]
    fn zero_samples_rejected() {
        assert_eq!(
            sample_chart(&Graph::empty(3).unwrap(), 0, 1),
            Err(Error::BadSampleCount)
        );
    }

    #[test]
    fn single_edge_coin_flip() {
        let e = sample_chart(&g(2, &[(1, 2)]), 10_000, 11).unwrap();
        assert_eq!(e.freqs[1], 0);
        let p0 = e.freqs[0] as f64 / 10_000.0;
        assert!((p0 - 0.5).abs() < 0.02, "p0 = {p0}");
    }

    #[test]
    fn partial_last_chunk_is_counted() {
        let e = sample_chart(&g(3, &[(1, 2)]), CHUNK_SIZE + 17, 5).unwrap();
        assert_eq!(e.freqs.iter().sum::<u64>(), CHUNK_SIZE + 17);
    }

    #[test]
    fn worker_count_does_not_change_tallies() {
        let c = Graph::circulant(9, &[1, 2]).unwrap();
        let one = sample_chart_with_workers(&c, 50_000, 99, 1).unwrap();
        let four = sample_chart_with_workers(&c, 50_000, 99, 4).unwrap();
        assert_eq!(one, four);
        assert_ne!(one, sample_chart_with_workers(&c, 50_000, 100, 4).unwrap());
    }

    #[test]
    fn r_matrix_examples() {
        let empty = hoeffding_r(&Graph::empty(4).unwrap()).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| empty.scaled(i, j) == 0)));
        assert!(variance_via_r(&empty).is_zero());

        for n in 2..=7 {
            let r = hoeffding_r(&Graph::complete(n).unwrap()).unwrap();
            let ni = n as i64;
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j { q(-(ni - 1), ni) } else { q(1, ni) };
                    assert_eq!(r.get(i, j), want);
                }
            }
            assert_eq!(variance_via_r(&r), BigRational::one());
        }

        let edge = hoeffding_r(&g(2, &[(1, 2)])).unwrap();
        assert_eq!(edge.get(0, 0), q(-1, 2));
        assert_eq!(edge.get(0, 1), q(1, 2));
        assert!(matches!(
            hoeffding_r(&Graph::empty(1).unwrap()),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn ratio_examples() {
        for n in 2..=8 {
            let r = hoeffding_ratio(&Graph::complete(n).unwrap()).unwrap();
            assert!((r - (n as f64 - 1.0) / n as f64).abs() < 1e-12);
        }
        assert!((hoeffding_ratio(&g(2, &[(1, 2)])).unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(
            hoeffding_ratio(&Graph::empty(3).unwrap()),
            Err(Error::DegenerateVariance)
        );
    }

    #[test]
    fn clt_report_on_exact_chart() {
        let gr = g(5, &[(1, 2), (3, 4)]);
        let chart = exact_chart(&gr).unwrap();
        let rep = clt_report(&gr, &chart).unwrap();
        assert_eq!(rep.mean_exact, q(4, 5));
        assert_eq!(rep.var_exact, q(19, 25));
        assert!((rep.mean_emp - 0.8).abs() < 1e-12);
        assert!((rep.var_emp - 0.76).abs() < 1e-12);
        assert!(rep.ks_distance > 0.0 && rep.ks_distance <= 1.0);
        assert_eq!(rep.samples, None);
        assert!(clt_report(&Graph::empty(5).unwrap(), &chart).is_err());
        assert!(matches!(
            clt_report(&g(4, &[(1, 2)]), &chart),
            Err(Error::ChartMismatch { .. })
        ));
    }

    #[test]
    fn ks_distance_of_a_point_mass_is_large() {
        let normal = Normal::new(2.0, 0.1).unwrap();
        let p = [0.0, 0.0, 1.0, 0.0];
        assert!(ks_distance(&p, &normal) < 1e-6);
        let shifted = [1.0, 0.0, 0.0, 0.0];
        assert!(ks_distance(&shifted, &normal) > 0.99);
    }

    #[test]
    fn plot_rows_end_at_one() {
        let gr = Graph::circulant(8, &[1]).unwrap();
        let rows = plot_rows(&gr, &exact_chart(&gr).unwrap()).unwrap();
        assert_eq!(rows.len(), 9);
        assert!((rows[8].empirical_cdf - 1.0).abs() < 1e-12);
        let csv = plot_csv(&rows);
        assert!(csv.starts_with("k,frequency,normal_density,empirical_cdf,normal_cdf\n0,"));
        assert_eq!(csv.lines().count(), 10);
    }
}
