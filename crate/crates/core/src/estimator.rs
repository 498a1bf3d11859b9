//! U-statistic estimation of `C_s(X) = E(X_{1:s})` from a sample.
//!
//! Averaging the minimum over all size-`s` subsets puts weight
//! `C(n-i, s-1) / C(n, s)` on the `i`-th order statistic, since `X_{i:n}` is the
//! minimum of exactly that many subsets. [`cregf_estimate`] uses those weights;
//! [`cregf_bruteforce`] enumerates the subsets and serves as a reference.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::sample::Sample;

/// Enumeration limit for [`cregf_bruteforce`].
pub const MAX_SUBSETS: f64 = 1e7;

/// A point estimate of `C_s(X)` or `C_s(X; t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CregfEstimate {
    pub value: f64,
    pub s: usize,
    /// Number of observations the estimate is built from (survivors past `t`
    /// for the dynamic version).
    pub n: usize,
    /// Conditioning time for the dynamic version.
    pub t: Option<f64>,
    pub std_error: Option<f64>,
    /// All observations were equal.
    pub degenerate: bool,
}

/// Order-statistic weights `w_i = C(n-i, s-1) / C(n, s)`, `i = 1..=n`.
///
/// Uses `w_1 = s/n` and `w_{i+1} = w_i (n-i-s+1)/(n-i)`, so no binomial
/// coefficient is ever formed.
pub fn ustat_weights(n: usize, s: usize) -> Result<Vec<f64>> {
    if s < 1 || s > n {
        return Err(Error::OrderOutOfRange { s, n });
    }
    let mut w = Vec::with_capacity(n);
    let mut current = s as f64 / n as f64;
    for i in 1..=n {
        w.push(current);
        if i + s > n {
            current = 0.0;
        } else {
            current *= (n - i - s + 1) as f64 / (n - i) as f64;
        }
    }
    Ok(w)
}

fn weighted_sum(sample: &Sample, s: usize) -> Result<f64> {
    let n = sample.len();
    let w = ustat_weights(n, s)?;
    Ok(w.iter()
        .zip(sample.values())
        .take(n - s + 1)
        .map(|(w, x)| w * x)
        .sum())
}

/// `Ĉ_s = Σ w_i X_{i:n}`, optionally with a plug-in standard error.
///
/// The standard error is attached only when requested and `n > s`.
pub fn cregf_estimate(sample: &Sample, s: usize, want_se: bool) -> Result<CregfEstimate> {
    let n = sample.len();
    let value = weighted_sum(sample, s)?;
    let std_error = if want_se && n > s {
        Some(cregf_stderr(sample, s)?)
    } else {
        None
    };
    Ok(CregfEstimate {
        value,
        s,
        n,
        t: None,
        std_error,
        degenerate: sample.is_degenerate(),
    })
}

/// Mean of the minimum over every size-`s` subset. Reference oracle.
pub fn cregf_bruteforce(sample: &Sample, s: usize) -> Result<f64> {
    let n = sample.len();
    if s < 1 || s > n {
        return Err(Error::OrderOutOfRange { s, n });
    }
    let count = binomial(n, s);
    if count > MAX_SUBSETS {
        return Err(Error::TooManySubsets { count });
    }
    let x = sample.values();
    let mut idx: Vec<usize> = (0..s).collect();
    let mut total = 0.0;
    let mut visited = 0usize;
    loop {
        total += idx.iter().map(|&i| x[i]).fold(f64::INFINITY, f64::min);
        visited += 1;
        // Advance to the next combination in lexicographic order.
        let mut pos = s;
        while pos > 0 && idx[pos - 1] == n - s + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        idx[pos - 1] += 1;
        for j in pos..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(total / visited as f64)
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Empirical survival `#{X_j > X_i} / n` at each order statistic (ties share
/// the count of strictly larger values).
fn empirical_survival_at_points(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut out = alloc::vec![0.0; n];
    let mut i = n;
    while i > 0 {
        let mut j = i - 1;
        while j > 0 && x[j - 1] == x[i - 1] {
            j -= 1;
        }
        let above = (n - i) as f64 / n as f64;
        for v in &mut out[j..i] {
            *v = above;
        }
        i = j;
    }
    out
}

/// `(1/n) Σ_{j: X_j <= X_i} X_j F̄ₙ(X_j)^k` at each order statistic, i.e. the
/// plug-in of `∫_0^x y F̄^k(y) dF(y)`.
fn empirical_partial_moment(x: &[f64], sf: &[f64], k: i32) -> Vec<f64> {
    let n = x.len();
    let mut out = alloc::vec![0.0; n];
    let mut acc = 0.0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && x[j] == x[i] {
            acc += x[j] * libm::pow(sf[j], f64::from(k));
            j += 1;
        }
        for v in &mut out[i..j] {
            *v = acc / n as f64;
        }
        i = j;
    }
    out
}

fn sample_sd(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    libm::sqrt(ss / (n - 1.0))
}

/// Influence values `ψ_i = X_i F̄ₙ(X_i)^{s-1} + (s-1) ∫_0^{X_i} y F̄ₙ^{s-2} dFₙ`.
pub(crate) fn cregf_influence(x: &[f64], s: usize) -> Vec<f64> {
    if s == 1 {
        return x.to_vec();
    }
    let sf = empirical_survival_at_points(x);
    let partial = empirical_partial_moment(x, &sf, s as i32 - 2);
    x.iter()
        .zip(&sf)
        .zip(&partial)
        .map(|((&xi, &f), &p)| xi * libm::pow(f, (s - 1) as f64) + (s - 1) as f64 * p)
        .collect()
}

/// Plug-in standard error `s · sd(ψ) / √n` of `Ĉ_s`.
///
/// For `s = 1` the influence function is `X` itself, so this is the standard
/// error of the mean. An all-equal sample returns exactly zero.
pub fn cregf_stderr(sample: &Sample, s: usize) -> Result<f64> {
    let n = sample.len();
    if s < 1 || s >= n {
        return Err(Error::OrderOutOfRange { s, n });
    }
    if sample.is_degenerate() {
        return Ok(0.0);
    }
    let psi = cregf_influence(sample.values(), s);
    Ok(s as f64 * sample_sd(&psi) / libm::sqrt(n as f64))
}

/// Estimate of `C_s(X; t)` from the residual sample `{X_i - t : X_i > t}`.
///
/// At `t = 0` the full sample is used unchanged, so the result equals
/// [`cregf_estimate`] exactly. The standard error, when requested, treats the
/// survivors as an i.i.d. sample of size `n` = number of survivors.
pub fn dcregf_estimate(sample: &Sample, s: usize, t: f64, want_se: bool) -> Result<CregfEstimate> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidParameter("t must be finite and >= 0"));
    }
    if s < 1 {
        return Err(Error::OrderOutOfRange { s, n: sample.len() });
    }
    if t == 0.0 {
        return Ok(CregfEstimate {
            t: Some(0.0),
            ..cregf_estimate(sample, s, want_se)?
        });
    }
    let residual = sample.residual(t);
    let survivors = residual.as_ref().map_or(0, Sample::len);
    match residual {
        Some(r) if survivors >= s => Ok(CregfEstimate {
            t: Some(t),
            ..cregf_estimate(&r, s, want_se)?
        }),
        _ => Err(Error::InsufficientSurvivors {
            survivors,
            required: s,
        }),
    }
}
