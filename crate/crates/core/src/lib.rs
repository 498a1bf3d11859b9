//! Estimation of the cumulative residual entropy generating function
//! `C_s(X) = ∫ F̄(x)^s dx` and its dynamic version from lifetime data, and a
//! U-statistic test of exponentiality against a decreasing dynamic CREGF.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod distributions;
pub mod error;
pub mod estimator;
pub mod exponentiality;
pub mod quadrature;
pub mod rng;
pub mod sample;
pub mod special;

pub use distributions::{AnalyticValue, DistributionModel, Family, Method};
pub use error::{Error, Result};
pub use estimator::{
    cregf_bruteforce, cregf_estimate, cregf_stderr, dcregf_estimate, ustat_weights, CregfEstimate,
};
pub use exponentiality::{
    alt_variance_plugin, delta_hat, delta_star, run_test, test_statistic, Sidedness, TestReport,
};
pub use rng::{substream_seed, UniformStream};
pub use sample::Sample;
