//! TOML experiment files for `cregf simulate`.
//!
//! ```toml
//! kind = "size_power"            # or "bias_mse"
//! models = ["exp:1", "weibull:2,1"]
//! n = [10, 20, 30, 40, 50]
//! s = [1]
//! alpha = [0.01, 0.05]           # size_power only
//! reps = 10000                   # default 10000
//! seed = 1                       # default 0
//! workers = 4                    # default: available cores
//! sidedness = "two-sided"        # or "one-sided-upper"
//! ```
//!
//! Model strings use the `family:p1,p2` syntax of the `analytic` command.

use std::path::Path;

use cregf_core::{DistributionModel, Sidedness};
use serde::Deserialize;

use crate::error::CliError;
use crate::harness::{SimKind, SimSpec};

pub const DEFAULT_REPS: usize = 10_000;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: SimKind,
    models: Vec<String>,
    n: Vec<usize>,
    s: Vec<usize>,
    #[serde(default)]
    alpha: Vec<f64>,
    reps: Option<usize>,
    seed: Option<u64>,
    workers: Option<usize>,
    sidedness: Option<String>,
}

pub fn parse_sidedness(s: &str) -> Result<Sidedness, CliError> {
    match s {
        "two-sided" => Ok(Sidedness::TwoSidedPaper),
        "one-sided-upper" => Ok(Sidedness::OneSidedUpper),
        other => Err(CliError::Config(format!("unknown sidedness {other:?}"))),
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Parses and validates an experiment description.
pub fn parse_spec(text: &str) -> Result<SimSpec, CliError> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
    let models = raw
        .models
        .iter()
        .map(|m| {
            m.parse::<DistributionModel>()
                .map_err(|e| CliError::Config(format!("model {m:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let spec = SimSpec {
        kind: raw.kind,
        models,
        n_list: raw.n,
        s_list: raw.s,
        alpha_list: raw.alpha,
        reps: raw.reps.unwrap_or(DEFAULT_REPS),
        master_seed: raw.seed.unwrap_or(0),
        workers: raw.workers.unwrap_or_else(default_workers),
        sidedness: raw
            .sidedness
            .as_deref()
            .map_or(Ok(Sidedness::TwoSidedPaper), parse_sidedness)?,
    };
    spec.validate()?;
    Ok(spec)
}

pub fn load_spec(path: &Path) -> Result<SimSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_spec(&text)
}
