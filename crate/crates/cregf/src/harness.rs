//! Seeded Monte Carlo engine for bias/MSE and size/power studies.
//!
//! A table cell is one `(model, n)` pair. Replication `r` of cell `c` draws
//! its sample from the stream seeded by `substream_seed(master_seed, c, r)`,
//! and every requested order `s` (and level `α`) is evaluated on that same
//! sample. Replications run on a dedicated rayon pool; their outcomes are
//! collected in replication order and reduced sequentially, so results are
//! bit-identical for any worker count.

use std::fmt;
use std::str::FromStr;

use cregf_core::{
    cregf_estimate, delta_star, run_test, substream_seed, DistributionModel, Sample, Sidedness,
    UniformStream,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimKind {
    BiasMse,
    SizePower,
}

/// A Monte Carlo experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct SimSpec {
    pub kind: SimKind,
    pub models: Vec<DistributionModel>,
    pub n_list: Vec<usize>,
    pub s_list: Vec<usize>,
    /// Levels for `SizePower`; ignored for `BiasMse`.
    pub alpha_list: Vec<f64>,
    pub reps: usize,
    pub master_seed: u64,
    pub workers: usize,
    pub sidedness: Sidedness,
}

impl SimSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::Config(m));
        if self.reps < 1 {
            return bad("reps must be at least 1".into());
        }
        if self.workers < 1 {
            return bad("workers must be at least 1".into());
        }
        if self.models.is_empty() || self.n_list.is_empty() || self.s_list.is_empty() {
            return bad("models, n and s must be non-empty".into());
        }
        if self.s_list.contains(&0) {
            return bad("orders s must be positive".into());
        }
        let s_max = *self.s_list.iter().max().unwrap();
        let n_min = match self.kind {
            SimKind::BiasMse => s_max,
            SimKind::SizePower => s_max + 1,
        };
        if let Some(n) = self.n_list.iter().find(|&&n| n < n_min) {
            return bad(format!("n = {n} is too small for s up to {s_max}"));
        }
        if self.kind == SimKind::SizePower {
            if self.alpha_list.is_empty() {
                return bad("size/power runs need at least one alpha".into());
            }
            if let Some(a) = self.alpha_list.iter().find(|a| !(**a > 0.0 && **a < 1.0)) {
                return bad(format!("alpha = {a} is outside (0, 1)"));
            }
        }
        Ok(())
    }

    fn cells(&self) -> impl Iterator<Item = (u64, &DistributionModel, usize)> + '_ {
        self.models
            .iter()
            .flat_map(move |m| self.n_list.iter().map(move |&n| (m, n)))
            .enumerate()
            .map(|(i, (m, n))| (i as u64, m, n))
    }

    fn cell_count(&self) -> usize {
        self.models.len() * self.n_list.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Metric {
    Bias,
    AbsBias,
    Mse,
    RejectionRate,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Bias => "bias",
            Metric::AbsBias => "abs_bias",
            Metric::Mse => "mse",
            Metric::RejectionRate => "rejection_rate",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Metric::Bias,
            Metric::AbsBias,
            Metric::Mse,
            Metric::RejectionRate,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| CliError::Usage(format!("unknown metric {s:?}")))
    }
}

/// One reported number: a moment or a rejection rate with its Monte Carlo SE.
#[derive(Debug, Clone, PartialEq)]
pub struct SimRow {
    pub model: String,
    pub n: usize,
    pub s: usize,
    pub metric: Metric,
    pub alpha: Option<f64>,
    pub value: f64,
    pub mc_se: f64,
}

/// Progress callback argument: cell `done` of `total` has just finished.
#[derive(Debug, Clone, Copy)]
pub struct Progress<'a> {
    pub done: usize,
    pub total: usize,
    pub model: &'a DistributionModel,
    pub n: usize,
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Config(format!("cannot start worker pool: {e}")))
}

/// Draws the sample of replication `rep` in cell `cell`.
fn replicate(model: &DistributionModel, n: usize, seed: u64, cell: u64, rep: u64) -> Sample {
    let mut stream = UniformStream::new(substream_seed(seed, cell, rep));
    let mut buf = Vec::with_capacity(n);
    model.draw_into(&mut stream, n, &mut buf);
    Sample::new(buf).expect("model draws are finite and non-negative")
}

/// Runs one cell's replications and returns their outcomes in rep order.
fn run_cell<T, F>(
    pool: &rayon::ThreadPool,
    spec: &SimSpec,
    model: &DistributionModel,
    n: usize,
    cell: u64,
    f: F,
) -> Result<Vec<T>, CliError>
where
    T: Send,
    F: Fn(&Sample) -> Result<T, cregf_core::Error> + Sync,
{
    pool.install(|| {
        (0..spec.reps as u64)
            .into_par_iter()
            .map(|rep| f(&replicate(model, n, spec.master_seed, cell, rep)))
            .collect::<Result<Vec<T>, _>>()
    })
    .map_err(CliError::from)
}

fn mean_and_se(xs: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let (mut count, mut sum) = (0usize, 0.0);
    for x in xs.clone() {
        count += 1;
        sum += x;
    }
    let m = sum / count as f64;
    if count < 2 {
        return (m, f64::NAN);
    }
    let ss: f64 = xs.map(|x| (x - m) * (x - m)).sum();
    (m, (ss / (count - 1) as f64 / count as f64).sqrt())
}

fn truth(model: &DistributionModel, s: usize) -> Result<f64, CliError> {
    let divergent = || CliError::DivergentTruth {
        model: model.to_string(),
        s,
    };
    let v = match model.cregf_closed(s as f64) {
        Ok(v) => v.value,
        Err(cregf_core::Error::NoClosedForm) => match model.cregf_numeric(s as f64) {
            Ok(v) => v.value,
            Err(cregf_core::Error::DivergentIntegral) => return Err(divergent()),
            Err(e) => return Err(e.into()),
        },
        Err(cregf_core::Error::DivergentIntegral) => return Err(divergent()),
        Err(e) => return Err(e.into()),
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(divergent())
    }
}

/// Bias, absolute bias and MSE of `Ĉ_s` against the model's true `C_s`.
pub fn run_bias_mse(spec: &SimSpec) -> Result<Vec<SimRow>, CliError> {
    run_bias_mse_with(spec, |_| {})
}

pub fn run_bias_mse_with(
    spec: &SimSpec,
    mut progress: impl FnMut(Progress<'_>),
) -> Result<Vec<SimRow>, CliError> {
    spec.validate()?;
    let pool = pool(spec.workers)?;
    let mut rows = Vec::new();
    let total = spec.cell_count();
    for (cell, model, n) in spec.cells() {
        let truths = spec
            .s_list
            .iter()
            .map(|&s| truth(model, s))
            .collect::<Result<Vec<_>, _>>()?;
        let estimates = run_cell(&pool, spec, model, n, cell, |x| {
            spec.s_list
                .iter()
                .map(|&s| cregf_estimate(x, s, false).map(|e| e.value))
                .collect::<Result<Vec<f64>, _>>()
        })?;
        for (k, (&s, &c)) in spec.s_list.iter().zip(&truths).enumerate() {
            let errs = estimates.iter().map(|e| e[k] - c);
            let (bias, bias_se) = mean_and_se(errs.clone());
            let (mse, mse_se) = mean_and_se(errs.map(|d| d * d));
            for (metric, value, mc_se) in [
                (Metric::Bias, bias, bias_se),
                (Metric::AbsBias, bias.abs(), bias_se),
                (Metric::Mse, mse, mse_se),
            ] {
                rows.push(SimRow {
                    model: model.to_string(),
                    n,
                    s,
                    metric,
                    alpha: None,
                    value,
                    mc_se,
                });
            }
        }
        progress(Progress {
            done: cell as usize + 1,
            total,
            model,
            n,
        });
    }
    Ok(rows)
}

/// Rejection rates of the exponentiality test, with binomial standard errors.
pub fn run_size_power(spec: &SimSpec) -> Result<Vec<SimRow>, CliError> {
    run_size_power_with(spec, |_| {})
}

pub fn run_size_power_with(
    spec: &SimSpec,
    mut progress: impl FnMut(Progress<'_>),
) -> Result<Vec<SimRow>, CliError> {
    spec.validate()?;
    let pool = pool(spec.workers)?;
    let mut rows = Vec::new();
    let total = spec.cell_count();
    let reps = spec.reps as f64;
    for (cell, model, n) in spec.cells() {
        // The decision at every level follows from the p-value alone.
        let p_values = run_cell(&pool, spec, model, n, cell, |x| {
            spec.s_list
                .iter()
                .map(|&s| run_test(x, s, spec.alpha_list[0], spec.sidedness).map(|r| r.p_value))
                .collect::<Result<Vec<f64>, _>>()
        })?;
        for (k, &s) in spec.s_list.iter().enumerate() {
            for &alpha in &spec.alpha_list {
                let hits = p_values.iter().filter(|p| p[k] < alpha).count();
                let rate = hits as f64 / reps;
                rows.push(SimRow {
                    model: model.to_string(),
                    n,
                    s,
                    metric: Metric::RejectionRate,
                    alpha: Some(alpha),
                    value: rate,
                    mc_se: (rate * (1.0 - rate) / reps).sqrt(),
                });
            }
        }
        progress(Progress {
            done: cell as usize + 1,
            total,
            model,
            n,
        });
    }
    Ok(rows)
}

/// Dispatches on `spec.kind`.
pub fn run(spec: &SimSpec, progress: impl FnMut(Progress<'_>)) -> Result<Vec<SimRow>, CliError> {
    match spec.kind {
        SimKind::BiasMse => run_bias_mse_with(spec, progress),
        SimKind::SizePower => run_size_power_with(spec, progress),
    }
}

/// Empirical null variance of `√n Δ̂*` against `s/(4s²-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullVariance {
    pub s: usize,
    pub n: usize,
    pub reps: usize,
    pub empirical: f64,
    pub target: f64,
    /// Normal-theory SE of the sample variance, `v √(2/(reps-1))`.
    pub mc_se: f64,
}

impl NullVariance {
    pub fn relative_error(&self) -> f64 {
        (self.empirical - self.target).abs() / self.target
    }
}

/// Samples `reps` exp(1) datasets of size `n` and returns the spread of `√n Δ̂*`.
pub fn null_variance_check(
    s: usize,
    n: usize,
    reps: usize,
    seed: u64,
    workers: usize,
) -> Result<NullVariance, CliError> {
    let spec = SimSpec {
        kind: SimKind::SizePower,
        models: vec!["exp:1".parse()?],
        n_list: vec![n],
        s_list: vec![s],
        alpha_list: vec![0.05],
        reps,
        master_seed: seed,
        workers,
        sidedness: Sidedness::TwoSidedPaper,
    };
    spec.validate()?;
    if reps < 2 {
        return Err(CliError::Config(
            "null variance needs at least 2 reps".into(),
        ));
    }
    let pool = pool(workers)?;
    let root_n = (n as f64).sqrt();
    let stars = run_cell(&pool, &spec, &spec.models[0], n, 0, |x| {
        delta_star(x, s).map(|d| root_n * d)
    })?;
    let (m, _) = mean_and_se(stars.iter().copied());
    let empirical = stars.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (reps - 1) as f64;
    Ok(NullVariance {
        s,
        n,
        reps,
        empirical,
        target: s as f64 / (4.0 * (s * s) as f64 - 1.0),
        mc_se: empirical * (2.0 / (reps - 1) as f64).sqrt(),
    })
}
