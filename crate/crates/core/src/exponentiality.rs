//! Test of exponentiality against a decreasing dynamic CREGF.
//!
//! The departure functional `Δ(F) = (s+1) E(X_{1:s+1}) - s E(X_{1:s})` is zero
//! for the exponential and positive when `C_s(X; t)` decreases in `t`. Its
//! U-statistic estimate is scaled by the sample mean and standardized with the
//! null variance `s / (4s² - 1)`.

use crate::error::{Error, Result};
use crate::estimator::{cregf_estimate, cregf_influence};
use crate::sample::Sample;
use crate::special::{normal_quantile, normal_sf};

/// Which tail(s) count as evidence against exponentiality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sidedness {
    /// Reject when `|T| > z_{α/2}`.
    #[default]
    TwoSidedPaper,
    /// Reject when the signed `T > z_α`.
    OneSidedUpper,
}

impl Sidedness {
    pub fn name(self) -> &'static str {
        match self {
            Sidedness::TwoSidedPaper => "two-sided",
            Sidedness::OneSidedUpper => "one-sided-upper",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestReport {
    pub s: usize,
    pub n: usize,
    pub delta_hat: f64,
    /// `delta_hat / sample mean`.
    pub delta_star: f64,
    pub statistic: f64,
    pub critical_value: f64,
    pub p_value: f64,
    pub alpha: f64,
    pub sidedness: Sidedness,
    pub reject: bool,
    /// Plug-in asymptotic SD of `√n Δ̂` under the alternative; diagnostic only.
    pub alt_se: Option<f64>,
    /// All observations were equal.
    pub degenerate: bool,
}

fn check_order(sample: &Sample, s: usize) -> Result<()> {
    let n = sample.len();
    if s < 1 || n < s + 1 {
        return Err(Error::OrderOutOfRange { s, n });
    }
    Ok(())
}

/// `Δ̂ = (s+1) Ĉ_{s+1} - s Ĉ_s`.
pub fn delta_hat(sample: &Sample, s: usize) -> Result<f64> {
    check_order(sample, s)?;
    let upper = cregf_estimate(sample, s + 1, false)?.value;
    let lower = cregf_estimate(sample, s, false)?.value;
    Ok((s + 1) as f64 * upper - s as f64 * lower)
}

/// Scale-invariant `Δ̂* = Δ̂ / X̄`.
pub fn delta_star(sample: &Sample, s: usize) -> Result<f64> {
    let d = delta_hat(sample, s)?;
    let mean = cregf_estimate(sample, 1, false)?.value;
    if mean == 0.0 {
        return Err(Error::ZeroMean);
    }
    Ok(d / mean)
}

fn standardize(n: usize, s: usize, delta_star: f64, sidedness: Sidedness) -> f64 {
    let s = s as f64;
    let scale = libm::sqrt(n as f64 * (4.0 * s * s - 1.0) / s);
    match sidedness {
        Sidedness::TwoSidedPaper => scale * delta_star.abs(),
        Sidedness::OneSidedUpper => scale * delta_star,
    }
}

/// `T = √(n(4s²-1)/s) · Δ̂*`, absolute value for the two-sided rule.
pub fn test_statistic(sample: &Sample, s: usize, sidedness: Sidedness) -> Result<f64> {
    let ds = delta_star(sample, s)?;
    Ok(standardize(sample.len(), s, ds, sidedness))
}

/// Full test at level `alpha`.
pub fn run_test(sample: &Sample, s: usize, alpha: f64, sidedness: Sidedness) -> Result<TestReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha { alpha });
    }
    let n = sample.len();
    let delta_hat = delta_hat(sample, s)?;
    let mean = cregf_estimate(sample, 1, false)?.value;
    if mean == 0.0 {
        return Err(Error::ZeroMean);
    }
    let delta_star = delta_hat / mean;
    let statistic = standardize(n, s, delta_star, sidedness);
    let (p_value, critical_value) = match sidedness {
        Sidedness::TwoSidedPaper => (
            2.0 * normal_sf(statistic),
            normal_quantile(1.0 - alpha / 2.0),
        ),
        Sidedness::OneSidedUpper => (normal_sf(statistic), normal_quantile(1.0 - alpha)),
    };
    let alt_se = alt_variance_plugin(sample, s).ok();
    Ok(TestReport {
        s,
        n,
        delta_hat,
        delta_star,
        statistic,
        critical_value,
        p_value,
        alpha,
        sidedness,
        reject: p_value < alpha,
        alt_se,
        degenerate: sample.is_degenerate(),
    })
}

/// Plug-in of the asymptotic SD of `√n Δ̂` under a general `F`: `(s+1) sd(ψ)`
/// with
///
/// `ψ(x) = (s+1) x F̄^s + s(s+1) ∫_0^x y F̄^{s-1} dF
///        - s²/(s+1) x F̄^{s-1} - (s-1)s²/(s+1) ∫_0^x y F̄^{s-2} dF`,
///
/// using the empirical survival `#{X_j > x}/n`.
pub fn alt_variance_plugin(sample: &Sample, s: usize) -> Result<f64> {
    let n = sample.len();
    if s < 1 || n < s + 2 {
        return Err(Error::OrderOutOfRange { s, n });
    }
    if sample.is_degenerate() {
        return Ok(0.0);
    }
    let x = sample.values();
    let sf = s as f64;
    // The s+1 kernel piece is the C_{s+1} influence; the s piece is C_s's.
    let upper = cregf_influence(x, s + 1);
    let lower = cregf_influence(x, s);
    let coef_lower = sf * sf / (sf + 1.0);
    let psi: alloc::vec::Vec<f64> = upper
        .iter()
        .zip(&lower)
        .map(|(u, l)| (sf + 1.0) * u - coef_lower * l)
        .collect();
    let m = psi.iter().sum::<f64>() / n as f64;
    let var = psi.iter().map(|p| (p - m) * (p - m)).sum::<f64>() / (n as f64 - 1.0);
    Ok((sf + 1.0) * libm::sqrt(var))
}
