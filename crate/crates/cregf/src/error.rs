use thiserror::Error;

/// Errors surfaced by the command-line front end and the harness.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("config: {0}")]
    Config(String),
    #[error("true value of C_{s} for {model} is not finite")]
    DivergentTruth { model: String, s: usize },
    #[error(transparent)]
    Core(#[from] cregf_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Process exit code: 2 for bad input, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        use cregf_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Config(_) => 2,
            CliError::DivergentTruth { .. } | CliError::Csv(_) => 3,
            CliError::Core(e) => match e {
                E::NonFiniteMean
                | E::NoClosedForm
                | E::DivergentIntegral
                | E::TooManySubsets { .. }
                | E::DegenerateSample
                | E::ZeroMean => 3,
                _ => 2,
            },
        }
    }
}
