//! Command-line front end, data files and the Monte Carlo harness for the
//! `cregf-core` estimators and exponentiality test.

pub mod cli;
pub mod config;
pub mod datafile;
pub mod error;
pub mod harness;
pub mod output;

pub use cregf_core;
pub use error::CliError;
pub use harness::{
    null_variance_check, run_bias_mse, run_size_power, Metric, NullVariance, SimKind, SimRow,
    SimSpec,
};
