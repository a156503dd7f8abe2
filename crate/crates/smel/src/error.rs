use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Unified error type for the toolkit.
///
/// Variants are grouped by how the CLI maps them to exit codes: data/format
/// problems exit with 2, numerical failures with 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("survival function underflow at t = {t}")]
    SurvivalUnderflow { t: f64 },

    #[error("quadrature did not converge (error estimate {error:.3e} > tolerance {tol:.3e})")]
    Quadrature { error: f64, tol: f64 },

    /// The proportional-MRL structure does not define a proper distribution
    /// for this covariate multiplier at this time.
    #[error("PMRL validity violation at (c = {c:.6}, t = {t:.6}): 1 + c*m0'(t) < 0")]
    PmrlDomain { c: f64, t: f64 },

    #[error("root bracketing failed on [{lo:.6e}, {hi:.6e}]: {what}")]
    Bracket { lo: f64, hi: f64, what: String },

    #[error("no convergence after {iterations} iterations: {what}")]
    NonConvergence { iterations: usize, what: String },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid data: {0}")]
    Data(String),

    #[error("not identifiable: {0}")]
    Unidentified(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code class used by the CLI: 2 = data error, 3 = numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Data(_)
            | Error::Config(_)
            | Error::EmptyInput(_)
            | Error::DimensionMismatch { .. }
            | Error::Io(_)
            | Error::Csv(_)
            | Error::Json(_) => 2,
            _ => 3,
        }
    }
}
