use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Validated lifetime observations, sorted ascending.
///
/// Construction sorts the input; the original order is not retained.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Validates and sorts raw observations. Ties are kept as-is.
    pub fn new(mut raw: Vec<f64>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteValue { index });
            }
            if value < 0.0 {
                return Err(Error::NegativeValue { index, value });
            }
        }
        raw.sort_unstable_by(f64::total_cmp);
        // -0.0 sorts below 0.0 under total_cmp; normalize so ties compare equal.
        for v in raw.iter_mut() {
            if *v == 0.0 {
                *v = 0.0;
            }
        }
        Ok(Self { values: raw })
    }

    pub fn from_slice(raw: &[f64]) -> Result<Self> {
        Self::new(raw.to_vec())
    }

    /// Order statistics `X_{1:n} <= ... <= X_{n:n}`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// True when every observation is equal.
    pub fn is_degenerate(&self) -> bool {
        self.values.first() == self.values.last()
    }

    /// Residual lifetimes `X - t` of the observations strictly above `t`.
    pub fn residual(&self, t: f64) -> Option<Sample> {
        let start = self.values.partition_point(|&x| x <= t);
        if start == self.values.len() {
            return None;
        }
        Some(Sample {
            values: self.values[start..].iter().map(|&x| x - t).collect(),
        })
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.values
    }
}
