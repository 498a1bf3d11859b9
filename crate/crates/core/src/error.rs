use core::fmt;

/// Errors raised by the analytic, estimation and testing routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Wrong parameter count or a parameter outside the family's range.
    InvalidParameter(&'static str),
    /// A distribution spec string could not be parsed.
    UnknownFamily,
    /// `x` is not in the interior of the support.
    OutsideSupport {
        x: f64,
    },
    NonFiniteMean,
    InvalidProbability {
        u: f64,
    },
    NoClosedForm,
    DivergentIntegral,
    /// Survival is zero at the conditioning time.
    DeadAtT {
        t: f64,
    },
    EmptyInput,
    NegativeValue {
        index: usize,
        value: f64,
    },
    NonFiniteValue {
        index: usize,
    },
    /// `s` is outside `1..=n` (or the tighter range an operation requires).
    OrderOutOfRange {
        s: usize,
        n: usize,
    },
    TooManySubsets {
        count: f64,
    },
    InsufficientSurvivors {
        survivors: usize,
        required: usize,
    },
    DegenerateSample,
    ZeroMean,
    InvalidAlpha {
        alpha: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::UnknownFamily => write!(f, "unknown distribution family"),
            Error::OutsideSupport { x } => write!(f, "x = {x} is outside the support"),
            Error::NonFiniteMean => write!(f, "distribution has no finite mean"),
            Error::InvalidProbability { u } => {
                write!(f, "probability {u} is not in the open interval (0, 1)")
            }
            Error::NoClosedForm => write!(f, "no closed form available for this family"),
            Error::DivergentIntegral => write!(f, "integral diverges"),
            Error::DeadAtT { t } => write!(f, "survival is zero at t = {t}"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::NegativeValue { index, value } => {
                write!(f, "negative value {value} at index {index}")
            }
            Error::NonFiniteValue { index } => write!(f, "non-finite value at index {index}"),
            Error::OrderOutOfRange { s, n } => {
                write!(f, "order s = {s} out of range for sample size n = {n}")
            }
            Error::TooManySubsets { count } => {
                write!(f, "{count:e} subsets exceeds the enumeration limit")
            }
            Error::InsufficientSurvivors {
                survivors,
                required,
            } => write!(
                f,
                "only {survivors} observations exceed t, at least {required} required"
            ),
            Error::DegenerateSample => write!(f, "all observations are equal"),
            Error::ZeroMean => write!(f, "sample mean is zero"),
            Error::InvalidAlpha { alpha } => {
                write!(f, "significance level {alpha} is not in (0, 1)")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
