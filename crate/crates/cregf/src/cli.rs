//! Argument parsing and the four commands.
//!
//! Every command renders to a `String`; `main` only prints it and maps
//! errors to exit codes (2 for bad input, 3 for numerical failures).

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cregf_core::{
    cregf_estimate, dcregf_estimate, run_test, AnalyticValue, DistributionModel, Error, Sidedness,
};
use serde_json::{json, Map, Value};

use crate::config::load_spec;
use crate::datafile::read_sample;
use crate::error::CliError;
use crate::harness;
use crate::output::{sig6, write_csv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cregf",
    version,
    about = "CREGF estimation and the DDCREGF exponentiality test"
)]
pub struct Cli {
    /// Output format for estimate, test and analytic.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Master seed for simulate; overrides the config file.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for simulate; overrides the config file.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate C_s(X), or C_s(X; t) with --t, from a data file.
    Estimate {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long)]
        t: Option<f64>,
        /// Also report the plug-in standard error.
        #[arg(long)]
        se: bool,
    },
    /// Test exponentiality against a decreasing DCREGF.
    Test {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// Reject only for large positive statistics.
        #[arg(long)]
        one_sided: bool,
    },
    /// Exact or numerically integrated C_s for a parametric model, e.g. `weibull:2,1`.
    Analytic {
        model: String,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long)]
        t: Option<f64>,
        /// Report the cumulative residual entropy instead.
        #[arg(long, conflicts_with_all = ["s", "t"])]
        cre: bool,
    },
    /// Run a Monte Carlo experiment described by a TOML file and emit CSV.
    Simulate {
        config: PathBuf,
        /// Destination CSV; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Ordered key/value report rendered either as aligned text or JSON.
struct Report(Vec<(&'static str, Value)>);

impl Report {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let map: Map<String, Value> = self
                    .0
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                let mut s = serde_json::to_string_pretty(&Value::Object(map)).unwrap();
                s.push('\n');
                s
            }
            Format::Text => {
                let width = self.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                self.0
                    .iter()
                    .map(|(k, v)| format!("{k:<width$}  {}\n", text_value(v)))
                    .collect()
            }
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Number(n) if n.is_f64() => sig6(n.as_f64().unwrap()),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn num(x: f64) -> Value {
    json!(x)
}

fn opt(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

fn cmd_estimate(file: &Path, s: usize, t: Option<f64>, se: bool) -> Result<Report, CliError> {
    let sample = read_sample(file)?;
    let est = match t {
        Some(t) => dcregf_estimate(&sample, s, t, se)?,
        None => cregf_estimate(&sample, s, se)?,
    };
    Ok(Report(vec![
        ("c_s", num(est.value)),
        ("s", json!(est.s)),
        ("n", json!(est.n)),
        ("t", opt(est.t)),
        ("se", opt(est.std_error)),
        ("degenerate", json!(est.degenerate)),
    ]))
}

fn cmd_test(file: &Path, s: usize, alpha: f64, one_sided: bool) -> Result<Report, CliError> {
    let sample = read_sample(file)?;
    let sidedness = if one_sided {
        Sidedness::OneSidedUpper
    } else {
        Sidedness::TwoSidedPaper
    };
    let r = run_test(&sample, s, alpha, sidedness)?;
    Ok(Report(vec![
        ("s", json!(r.s)),
        ("n", json!(r.n)),
        ("delta_hat", num(r.delta_hat)),
        ("delta_star", num(r.delta_star)),
        ("statistic", num(r.statistic)),
        ("critical_value", num(r.critical_value)),
        ("p_value", num(r.p_value)),
        ("alpha", num(r.alpha)),
        ("sidedness", json!(r.sidedness.name())),
        ("reject", json!(r.reject)),
        (
            "decision",
            json!(if r.reject { "reject H0" } else { "accept H0" }),
        ),
        ("alt_se", opt(r.alt_se)),
        ("degenerate", json!(r.degenerate)),
    ]))
}

fn closed_then_numeric(
    closed: Result<AnalyticValue, Error>,
    numeric: impl Fn() -> Result<AnalyticValue, Error>,
) -> Result<(AnalyticValue, Option<AnalyticValue>), CliError> {
    match closed {
        Ok(v) => Ok((v, numeric().ok())),
        Err(Error::NoClosedForm) => Ok((numeric()?, None)),
        Err(e) => Err(e.into()),
    }
}

fn cmd_analytic(spec: &str, s: f64, t: Option<f64>, cre: bool) -> Result<Report, CliError> {
    let model: DistributionModel = spec.parse()?;
    let (quantity, (value, check)) = if cre {
        ("cre", (model.cre_from_generating()?, None))
    } else if let Some(t) = t {
        (
            "dcregf",
            closed_then_numeric(model.dcregf_closed(s, t), || model.dcregf_numeric(s, t))?,
        )
    } else {
        (
            "cregf",
            closed_then_numeric(model.cregf_closed(s), || model.cregf_numeric(s))?,
        )
    };
    let mut fields = vec![
        ("model", json!(model.to_string())),
        ("quantity", json!(quantity)),
        ("s", if cre { Value::Null } else { num(s) }),
        ("t", opt(t)),
        ("value", num(value.value)),
        ("method", json!(value.method.name())),
        ("abs_err_bound", num(value.abs_err_bound)),
    ];
    if let Some(c) = check {
        fields.push(("numeric_check", num(c.value)));
        fields.push(("numeric_abs_err_bound", num(c.abs_err_bound)));
    }
    Ok(Report(fields))
}

fn cmd_simulate(
    config: &Path,
    out: Option<&Path>,
    seed: Option<u64>,
    workers: Option<usize>,
) -> Result<String, CliError> {
    let mut spec = load_spec(config)?;
    if let Some(seed) = seed {
        spec.master_seed = seed;
    }
    if let Some(w) = workers {
        spec.workers = w;
    }
    spec.validate()?;
    let started = std::time::Instant::now();
    let rows = harness::run(&spec, |p| {
        eprintln!(
            "[{}/{}] {} n={} ({:.1}s)",
            p.done,
            p.total,
            p.model,
            p.n,
            started.elapsed().as_secs_f64()
        );
    })?;
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows)?;
    match out {
        Some(path) => {
            let io = |source| CliError::Io {
                path: path.display().to_string(),
                source,
            };
            std::fs::File::create(path)
                .and_then(|mut f| f.write_all(&buf))
                .map_err(io)?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
            Ok(String::new())
        }
        None => Ok(String::from_utf8(buf).expect("csv output is utf-8")),
    }
}

/// Runs a parsed command line and returns what should go to stdout.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Estimate { file, s, t, se } => {
            Ok(cmd_estimate(file, *s, *t, *se)?.render(cli.format))
        }
        Command::Test {
            file,
            s,
            alpha,
            one_sided,
        } => Ok(cmd_test(file, *s, *alpha, *one_sided)?.render(cli.format)),
        Command::Analytic { model, s, t, cre } => {
            Ok(cmd_analytic(model, *s, *t, *cre)?.render(cli.format))
        }
        Command::Simulate { config, out } => {
            if cli.workers == Some(0) {
                return Err(CliError::Usage("--workers must be at least 1".into()));
            }
            cmd_simulate(config, out.as_deref(), cli.seed, cli.workers)
        }
    }
}

/// Entry point shared by the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
