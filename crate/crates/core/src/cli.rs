//! The `mpchart` command line: argument model, dispatch and rendering.
//!
//! [`run`] builds the whole artifact in memory before anything is written, so
//! a failing command never leaves partial output behind.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::chart::{
    brute_force_chart, chart_from_mg, closed_form_mean, closed_form_variance,
    complement_chart_from_mg, complement_moments, exact_chart, mg_matrix, mg_matrix_brute,
    moments_from_chart, MgMatrix, MpChart,
};
use crate::error::{Error, Result};
use crate::fixtures::{fixture_graph, list_fixtures};
use crate::graph::{Graph, GraphFormat};
use crate::monte_carlo::{
    clt_report, plot_csv, plot_rows, sample_chart, sample_chart_with_workers, ChartDistribution,
    EmpiricalChart,
};
use crate::permanent::{
    classical_permanent, mp_maximal_subgraphs, mp_permanent, symmetric_max_term,
    CLASSICAL_PERMANENT_CAP, MAXIMAL_SUBGRAPH_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Max-plus permanent, classical permanent, symmetric term, mp-maximal subgraphs
    Perm,
    /// The mp-chart (exact, brute force or sampled)
    Chart,
    /// Closed-form and chart moments, plus the complement's moments
    Moments,
    /// Joint fixed-point / hit count matrix
    Mgmatrix,
    /// The complement graph
    Complement,
    /// Normal-approximation report, or plot data with `--output-format csv`
    Clt,
    /// List the built-in graphs
    Fixtures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Brute,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    EdgeList,
    Dense,
    Json,
}

impl From<InputFormat> for GraphFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::EdgeList => GraphFormat::EdgeList,
            InputFormat::Dense => GraphFormat::Dense,
            InputFormat::Json => GraphFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// Max-plus permanents and mp-charts of undirected simple graphs.
#[derive(Debug, Clone, Parser)]
#[command(name = "mpchart", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Graph file, or `-` for stdin
    #[arg(long, short, conflicts_with = "fixture")]
    pub input: Option<PathBuf>,

    /// Built-in graph name (see the `fixtures` command)
    #[arg(long)]
    pub fixture: Option<String>,

    #[arg(long, value_enum, default_value = "edge-list")]
    pub format: InputFormat,

    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,

    /// Permutations to draw in `mc` mode
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,

    #[arg(long, env = "MPCHART_SEED", default_value_t = 7)]
    pub seed: u64,

    /// Sampling threads (default: all cores). Does not affect results.
    #[arg(long)]
    pub workers: Option<usize>,

    /// Write here instead of stdout
    #[arg(long, short)]
    pub output: Option<PathBuf>,

    /// Defaults to `text` for `perm` and `json` otherwise
    #[arg(long = "output-format", value_enum)]
    pub output_format: Option<OutputFormat>,
}

impl RunConfig {
    /// A config for `command` with every other option at its default.
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: None,
            fixture: None,
            format: InputFormat::EdgeList,
            mode: Mode::Exact,
            samples: 100_000,
            seed: 7,
            workers: None,
            output: None,
            output_format: None,
        }
    }

    pub fn with_fixture(mut self, name: &str) -> Self {
        self.fixture = Some(name.to_string());
        self
    }

    fn output_format(&self) -> OutputFormat {
        self.output_format.unwrap_or(match self.command {
            Command::Perm => OutputFormat::Text,
            _ => OutputFormat::Json,
        })
    }

    fn load_graph(&self) -> Result<Graph> {
        match (&self.fixture, &self.input) {
            (Some(name), _) => fixture_graph(name),
            (None, Some(path)) => {
                let text = if path.as_os_str() == "-" {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s)?;
                    s
                } else {
                    std::fs::read_to_string(path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
                };
                Graph::parse(&text, self.format.into())
            }
            (None, None) => Err(Error::Parse {
                line: 0,
                message: "no graph given: pass --input or --fixture".into(),
            }),
        }
    }

    fn sample(&self, g: &Graph) -> Result<EmpiricalChart> {
        match self.workers {
            Some(w) => sample_chart_with_workers(g, self.samples, self.seed, w),
            None => sample_chart(g, self.samples, self.seed),
        }
    }
}

/// Runs one command and returns the rendered artifact.
pub fn run(config: &RunConfig) -> Result<String> {
    if config.command == Command::Fixtures {
        return Ok(render_fixtures(config.output_format()));
    }
    let g = config.load_graph()?;
    let fmt = config.output_format();
    match config.command {
        Command::Perm => perm(&g, fmt),
        Command::Chart => chart(config, &g, fmt),
        Command::Moments => moments(config, &g, fmt),
        Command::Mgmatrix => mgmatrix(config, &g, fmt),
        Command::Complement => Ok(complement(&g, fmt)),
        Command::Clt => clt(config, &g, fmt),
        Command::Fixtures => unreachable!(),
    }
}

/// Runs and writes to `config.output` or stdout.
pub fn execute(config: &RunConfig) -> Result<()> {
    let out = run(config)?;
    match &config.output {
        Some(path) => {
            std::fs::write(path, out).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
        }
        None => print!("{out}"),
    }
    Ok(())
}

fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON rendering");
    s.push('\n');
    s
}

fn one_based(pairs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

fn perm(g: &Graph, fmt: OutputFormat) -> Result<String> {
    let mp = mp_permanent(g);
    if fmt == OutputFormat::Text {
        return Ok(format!("{mp}\n"));
    }
    let classical = (g.n() <= CLASSICAL_PERMANENT_CAP)
        .then(|| classical_permanent(g))
        .transpose()?;
    let term = if g.is_empty() {
        None
    } else {
        Some(symmetric_max_term(g)?)
    };
    let maximal = if g.is_empty() || g.n() > MAXIMAL_SUBGRAPH_CAP {
        None
    } else {
        Some(mp_maximal_subgraphs(g)?)
    };
    if fmt == OutputFormat::Csv {
        let mut s = String::from("n,mp_permanent,classical_permanent\n");
        let c = classical.map(|c| c.to_string()).unwrap_or_default();
        let _ = writeln!(s, "{},{mp},{c}", g.n());
        return Ok(s);
    }
    let v = json!({
        "n": g.n(),
        "mp_permanent": mp,
        "classical_permanent": classical.map(|c| c.to_string()),
        "full_permanent_equivalence": classical.map(|c| (mp == g.n()) == (c > 0)),
        "symmetric_term": term.map(|t| one_based(&t.pairs)),
        "mp_maximal_subgraphs": maximal.map(|subs| subs.iter().map(|s| json!({
            "vertices": s.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "edges": one_based(&s.edges),
        })).collect::<Vec<_>>()),
    });
    Ok(to_json_string(&v))
}

fn exact_or_brute(mode: Mode, g: &Graph) -> Result<MpChart> {
    match mode {
        Mode::Brute => brute_force_chart(g),
        _ => exact_chart(g),
    }
}

fn render_counts(counts: &[String], normalized: &[f64], fmt: OutputFormat, v: Value) -> String {
    match fmt {
        OutputFormat::Json => to_json_string(&v),
        OutputFormat::Csv => {
            let mut s = String::from("k,count,normalized\n");
            for (k, (c, p)) in counts.iter().zip(normalized).enumerate() {
                let _ = writeln!(s, "{k},{c},{p}");
            }
            s
        }
        OutputFormat::Text => format!("{}\n", counts.join(" ")),
    }
}

fn chart(config: &RunConfig, g: &Graph, fmt: OutputFormat) -> Result<String> {
    if config.mode == Mode::Mc {
        let e = config.sample(g)?;
        let counts: Vec<String> = e.freqs.iter().map(u64::to_string).collect();
        return Ok(render_counts(
            &counts,
            &e.normalized(),
            fmt,
            e.to_json_value(),
        ));
    }
    let c = exact_or_brute(config.mode, g)?;
    let counts: Vec<String> = c.counts().iter().map(BigUint::to_string).collect();
    Ok(render_counts(
        &counts,
        &c.normalized(),
        fmt,
        c.to_json_value(),
    ))
}

fn moments(config: &RunConfig, g: &Graph, fmt: OutputFormat) -> Result<String> {
    let n = g.n();
    let deg = g.degree_profile();
    let mean = closed_form_mean(&deg, n)?;
    let variance = closed_form_variance(&deg, &g.t_matrix(), n)?;
    let closed = crate::chart::ChartMoments { mean, variance };
    let compl = complement_moments(&closed, n)?;
    let (source, from_chart) = match config.mode {
        Mode::Mc => {
            let e = config.sample(g)?;
            (
                "sampled",
                json!({ "mean": e.mean(), "variance": e.variance(), "samples": e.samples }),
            )
        }
        mode => {
            let m = moments_from_chart(&exact_or_brute(mode, g)?);
            ("chart", m.to_json_value())
        }
    };
    match fmt {
        OutputFormat::Json => {
            let mut v = json!({
                "n": n,
                "edge_count": deg.edge_count,
                "closed_form": closed.to_json_value(),
                "complement": compl.to_json_value(),
            });
            v[source] = from_chart;
            Ok(to_json_string(&v))
        }
        OutputFormat::Csv => {
            let mut s = String::from("quantity,mean,variance\n");
            let _ = writeln!(s, "closed_form,{},{}", closed.mean, closed.variance);
            let _ = writeln!(
                s,
                "{source},{},{}",
                from_chart["mean"], from_chart["variance"]
            );
            let _ = writeln!(s, "complement,{},{}", compl.mean, compl.variance);
            Ok(s.replace('"', ""))
        }
        OutputFormat::Text => Ok(format!(
            "mean {}\nvariance {}\ncomplement mean {}\ncomplement variance {}\n",
            closed.mean, closed.variance, compl.mean, compl.variance
        )),
    }
}

fn mgmatrix(config: &RunConfig, g: &Graph, fmt: OutputFormat) -> Result<String> {
    let m: MgMatrix = match config.mode {
        Mode::Brute => mg_matrix_brute(g)?,
        Mode::Exact => mg_matrix(g)?,
        Mode::Mc => {
            return Err(Error::Parse {
                line: 0,
                message: "mgmatrix supports --mode exact or brute".into(),
            })
        }
    };
    let strings = |c: &MpChart| {
        c.counts()
            .iter()
            .map(BigUint::to_string)
            .collect::<Vec<_>>()
    };
    match fmt {
        OutputFormat::Json => {
            let mut v = m.to_json_value();
            v["chart"] = json!(strings(&chart_from_mg(&m)));
            v["complement_chart"] = json!(strings(&complement_chart_from_mg(&m)));
            Ok(to_json_string(&v))
        }
        OutputFormat::Csv | OutputFormat::Text => {
            let sep = if fmt == OutputFormat::Csv { "," } else { " " };
            let mut s = String::new();
            for row in m.rows() {
                let cells: Vec<String> = row.iter().map(BigUint::to_string).collect();
                s.push_str(&cells.join(sep));
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn complement(g: &Graph, fmt: OutputFormat) -> String {
    let c = g.complement();
    match fmt {
        OutputFormat::Json => to_json_string(&c.to_json_value()),
        OutputFormat::Text => c.serialize(GraphFormat::EdgeList),
        OutputFormat::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in c.edges() {
                let _ = writeln!(s, "{},{}", u + 1, v + 1);
            }
            s
        }
    }
}

fn clt(config: &RunConfig, g: &Graph, fmt: OutputFormat) -> Result<String> {
    let chart: Box<dyn ChartDistribution> = match config.mode {
        Mode::Mc => Box::new(config.sample(g)?),
        mode => Box::new(exact_or_brute(mode, g)?),
    };
    let report = clt_report(g, chart.as_ref())?;
    match fmt {
        OutputFormat::Json => Ok(to_json_string(&report.to_json_value())),
        OutputFormat::Csv => Ok(plot_csv(&plot_rows(g, chart.as_ref())?)),
        OutputFormat::Text => Ok(format!(
            "mean exact {} ({:.6}) observed {:.6}\nvariance exact {} ({:.6}) observed {:.6}\n\
             ks distance {:.6}\nhoeffding ratio {:.6}\n",
            report.mean_exact,
            report.mean_exact_f64(),
            report.mean_emp,
            report.var_exact,
            report.var_exact_f64(),
            report.var_emp,
            report.ks_distance,
            report.hoeffding_ratio
        )),
    }
}

fn render_fixtures(fmt: OutputFormat) -> String {
    let all = list_fixtures();
    match fmt {
        OutputFormat::Json => to_json_string(&json!(all
            .iter()
            .map(|f| json!({
                "name": f.name,
                "n": f.n,
                "edge_count": f.edges.len(),
                "description": f.description,
            }))
            .collect::<Vec<_>>())),
        OutputFormat::Csv => {
            let mut s = String::from("name,n,edge_count,description\n");
            for f in all {
                let _ = writeln!(
                    s,
                    "{},{},{},\"{}\"",
                    f.name,
                    f.n,
                    f.edges.len(),
                    f.description
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for f in all {
                let _ = writeln!(
                    s,
                    "{:<18} n={:<3} edges={:<4} {}",
                    f.name,
                    f.n,
                    f.edges.len(),
                    f.description
                );
            }
            s
        }
    }
}
