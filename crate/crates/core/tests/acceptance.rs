mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{counts_u64, factorial, oracle_maximal_subgraphs, random_graph, rng};
use mpchart::chart::{
    brute_force_chart, closed_form_mean, closed_form_variance, complement_chart_from_mg,
    complement_moments, exact_chart, mg_matrix, moments_from_chart,
};
use mpchart::fixtures::fixture_graph;
use mpchart::graph::complement_t_matrix;
use mpchart::monte_carlo::{
    clt_report, hoeffding_r, sample_chart, sample_chart_with_workers, variance_via_r,
    variance_via_r_f64,
};
use mpchart::permanent::{classical_permanent, mp_maximal_subgraphs, mp_permanent};
use mpchart::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn fx(name: &str) -> Graph {
    fixture_graph(name).expect("fixture exists")
}

fn exact_chart_regression() -> Outcome {
    let start = Instant::now();
    let expected: [(&str, &[u64]); 4] = [
        ("paper-5v-g1", &[48, 48, 24, 0, 0, 0]),
        ("paper-5v-g2", &[53, 44, 18, 4, 1, 0]),
        ("paper-7v-g1", &[678, 1512, 1716, 840, 294, 0, 0, 0]),
        ("paper-7v-g2", &[674, 1480, 1792, 840, 218, 32, 4, 0]),
    ];
    for (name, want) in expected {
        let got = counts_u64(&exact_chart(&fx(name)).unwrap());
        ensure(got == want, || format!("{name}: {got:?} != {want:?}"))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 1.0, || format!("took {secs:.3} s"))?;
    Ok(format!("4 charts exact in {:.1} ms", secs * 1e3))
}

fn moment_identities() -> Outcome {
    let mut r = rng(2);
    for trial in 0..200 {
        let n = r.gen_range(2..=10);
        let g = random_graph(&mut r, n);
        let m = moments_from_chart(&exact_chart(&g).unwrap());
        let deg = g.degree_profile();
        let mean = ratio(2 * g.edge_count() as i64, n as i64);
        ensure(
            m.mean == mean && closed_form_mean(&deg, n).unwrap() == mean,
            || format!("trial {trial}: mean {} != {mean}", m.mean),
        )?;
        let v = closed_form_variance(&deg, &g.t_matrix(), n).unwrap();
        ensure(m.variance == v, || {
            format!("trial {trial}: variance {} != {v}", m.variance)
        })?;
    }
    let fixtures = [
        ("paper-5v-g1", ratio(4, 5), ratio(14, 25)),
        ("paper-5v-g2", ratio(4, 5), ratio(19, 25)),
        ("paper-7v-g1", ratio(12, 7), ratio(170, 147)),
        ("paper-7v-g2", ratio(12, 7), ratio(170, 147)),
    ];
    for (name, mean, var) in fixtures {
        let m = moments_from_chart(&exact_chart(&fx(name)).unwrap());
        ensure(m.mean == mean && m.variance == var, || {
            format!("{name}: ({}, {}) != ({mean}, {var})", m.mean, m.variance)
        })?;
    }
    Ok("200 random graphs exact; 4/5, 14/25, 19/25, 12/7, 170/147 on fixtures".into())
}

fn permanent_equivalence() -> Outcome {
    let mut r = rng(3);
    for trial in 0..500 {
        let n = r.gen_range(1..=8);
        let g = random_graph(&mut r, n);
        let p = mp_permanent(&g);
        let support = exact_chart(&g).unwrap().max_support();
        ensure(p == support, || {
            format!("trial {trial}: perm {p} vs support {support}")
        })?;
        let ryser = classical_permanent(&g).unwrap();
        ensure((p == n) == (ryser > 0), || {
            format!("trial {trial}: perm {p}, Ryser {ryser}")
        })?;
    }
    let expected = [
        ("paper-ex26-g1", 4),
        ("paper-ex26-g2", 4),
        ("paper-ex26-g3", 3),
        ("paper-ex27-g1", 2),
        ("paper-ex27-g2", 6),
    ];
    for (name, want) in expected {
        let got = mp_permanent(&fx(name));
        ensure(got == want, || format!("{name}: {got} != {want}"))?;
    }
    Ok("500 random graphs; fixtures 4, 4, 3, 2, 6".into())
}

fn complement_suite() -> Outcome {
    let mut r = rng(4);
    for trial in 0..200 {
        let n = r.gen_range(2..=8);
        let g = random_graph(&mut r, n);
        let c = g.complement();
        let m = moments_from_chart(&exact_chart(&g).unwrap());
        let mc = moments_from_chart(&exact_chart(&c).unwrap());
        let predicted = complement_moments(&m, n).unwrap();
        ensure(predicted.mean == mc.mean, || {
            format!("trial {trial}: complement mean")
        })?;
        ensure(predicted.variance == mc.variance, || {
            format!("trial {trial}: complement variance")
        })?;
        let t = complement_t_matrix(&g.t_matrix(), &g.degree_profile(), &g);
        ensure(t == c.t_matrix(), || {
            format!("trial {trial}: complement T-matrix")
        })?;
        let via_mg = complement_chart_from_mg(&mg_matrix(&g).unwrap());
        ensure(via_mg == brute_force_chart(&c).unwrap(), || {
            format!("trial {trial}: M_G chart")
        })?;
    }
    let m = mg_matrix(&fx("paper-s4-example")).unwrap();
    let rows: Vec<Vec<u64>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_u64().unwrap()).collect())
        .collect();
    let want: Vec<Vec<u64>> = vec![
        vec![1, 2, 3, 2, 1],
        vec![0, 4, 4, 0, 0],
        vec![3, 0, 3, 0, 0],
        vec![0, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0],
    ];
    ensure(rows == want, || format!("M_G {rows:?}"))?;
    Ok("200 random graphs; 5x5 M_G matrix entry-for-entry".into())
}

fn variance_cross_formula() -> Outcome {
    let mut r = rng(5);
    for trial in 0..200 {
        let n = r.gen_range(2..=10);
        let g = random_graph(&mut r, n);
        let v = closed_form_variance(&g.degree_profile(), &g.t_matrix(), n).unwrap();
        let via = variance_via_r(&hoeffding_r(&g).unwrap());
        ensure(via == v, || format!("trial {trial}: {via} != {v}"))?;
    }
    let mut worst = 0.0f64;
    for name in ["fig4-doublestar", "fig5-circulant", "fig6-random95"] {
        let g = fx(name);
        let v = closed_form_variance(&g.degree_profile(), &g.t_matrix(), 20).unwrap();
        let gap = (variance_via_r_f64(&hoeffding_r(&g).unwrap()) - v.to_f64().unwrap()).abs();
        worst = worst.max(gap);
        ensure(gap <= 1e-9, || format!("{name}: float gap {gap:e}"))?;
    }
    for n in 2..=12 {
        let v = variance_via_r(&hoeffding_r(&Graph::complete(n).unwrap()).unwrap());
        ensure(v == ratio(1, 1), || format!("K_{n}: {v}"))?;
    }
    Ok(format!(
        "200 exact, n=20 max gap {worst:.1e}, K_2..K_12 give 1"
    ))
}

fn monte_carlo_clt() -> Outcome {
    let start = Instant::now();
    let samples = 100_000u64;
    let mut details = Vec::new();
    for (name, mean) in [
        ("fig4-doublestar", 2.7),
        ("fig5-circulant", 4.0),
        ("fig6-random95", 9.5),
    ] {
        let g = fx(name);
        let e = sample_chart(&g, samples, 7).unwrap();
        let rep = clt_report(&g, &e).unwrap();
        ensure((rep.mean_exact_f64() - mean).abs() < 1e-12, || {
            format!("{name}: exact mean")
        })?;
        let se = rep.mean_standard_error().unwrap();
        let z = (rep.mean_emp - mean) / se;
        ensure(z.abs() < 3.0, || format!("{name}: mean off by {z:.2} SE"))?;
        let rel = (rep.var_emp - rep.var_exact_f64()).abs() / rep.var_exact_f64();
        ensure(rel < 0.05, || {
            format!("{name}: variance off by {:.2}%", rel * 100.0)
        })?;
        ensure(rep.ks_distance < 0.05, || {
            format!("{name}: KS {:.4}", rep.ks_distance)
        })?;
        details.push(format!(
            "{name} z={z:+.2} dV={:.2}% KS={:.4}",
            rel * 100.0,
            rep.ks_distance
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, || format!("took {secs:.1} s"))?;
    Ok(format!("{} in {secs:.2} s", details.join(", ")))
}

fn exact_n20_chart() -> Outcome {
    let g = fx("fig5-circulant");
    let start = Instant::now();
    let chart = exact_chart(&g).unwrap();
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 300.0, || format!("took {secs:.1} s"))?;
    ensure(chart.total() == factorial(20), || {
        "counts do not sum to 20!".into()
    })?;
    let samples = 100_000u64;
    let emp = sample_chart(&g, samples, 7).unwrap().normalized();
    let mut worst = 0.0f64;
    for (k, p) in chart.normalized().into_iter().enumerate() {
        let se = (p * (1.0 - p) / samples as f64).sqrt();
        let gap = (emp[k] - p).abs();
        if se > 0.0 {
            worst = worst.max(gap / se);
        }
        ensure(gap <= 3.0 * se, || {
            format!("k={k}: gap {gap:.5} vs 3 SE {:.5}", 3.0 * se)
        })?;
    }
    Ok(format!(
        "{:.2} s, sums to 20!, worst component {worst:.2} SE",
        secs
    ))
}

fn determinism() -> Outcome {
    let g = fx("fig6-random95");
    let one = sample_chart_with_workers(&g, 100_000, 7, 1).unwrap();
    for workers in [2, 8] {
        let other = sample_chart_with_workers(&g, 100_000, 7, workers).unwrap();
        ensure(other == one, || format!("{workers} workers differ from 1"))?;
    }
    ensure(sample_chart(&g, 100_000, 7).unwrap() == one, || {
        "default pool differs".into()
    })?;
    Ok("1, 2 and 8 workers bit-identical".into())
}

fn maximal_subgraphs() -> Outcome {
    for name in ["paper-ex26-g3", "paper-ex27-g2"] {
        let count = mp_maximal_subgraphs(&fx(name)).unwrap().len();
        ensure(count == 1, || format!("{name}: {count} subgraphs"))?;
    }
    let mut r = rng(9);
    let mut checked = 0;
    while checked < 100 {
        let n = r.gen_range(2..=9);
        let g = random_graph(&mut r, n);
        if g.is_empty() {
            continue;
        }
        let subs = mp_maximal_subgraphs(&g).unwrap();
        for (i, a) in subs.iter().enumerate() {
            for b in &subs[i + 1..] {
                ensure(a.shares_vertex_with(b), || {
                    format!("graph {checked}: disjoint pair")
                })?;
            }
        }
        if n <= 6 {
            let got: Vec<_> = subs
                .iter()
                .map(|s| (s.vertices.clone(), s.edges.clone()))
                .collect();
            ensure(got == oracle_maximal_subgraphs(&g), || {
                format!("graph {checked}: oracle")
            })?;
        }
        checked += 1;
    }
    let star = fx("paper-ex27-g1");
    let found = mp_maximal_subgraphs(&star).unwrap();
    let oracle = oracle_maximal_subgraphs(&star);
    ensure(found.len() == 3 && oracle.len() == 3, || {
        format!("star: {} found", found.len())
    })?;
    Ok(
        "unique on ex26-g3 and ex27-g2; 100 random graphs intersect; ex27-g1 has 3 (enumerated)"
            .into(),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exact-chart regression", exact_chart_regression),
        ("moment identities", moment_identities),
        ("permanent equivalence", permanent_equivalence),
        ("complement suite", complement_suite),
        ("variance cross-formula", variance_cross_formula),
        ("Monte Carlo CLT at n=20", monte_carlo_clt),
        ("exact chart at n=20", exact_n20_chart),
        ("sampling determinism", determinism),
        ("mp-maximal subgraphs", maximal_subgraphs),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 9 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
