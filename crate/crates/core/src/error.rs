use thiserror::Error;

/// Errors raised by the simulator.
///
/// Variants map onto the command-line exit codes: validation and precondition
/// failures are usage errors (2), I/O is 3, and everything numerical is 4.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A domain-type invariant does not hold (e.g. `|v|² > p(1-p)`).
    #[error("invalid {what}: {reason}")]
    Validation { what: &'static str, reason: String },

    /// An operation was called outside its stated domain (e.g. `t < 0`).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A computed quantity is NaN or infinite.
    #[error("non-finite value in {0}")]
    NumericalDomain(&'static str),

    /// Adaptive quadrature hit its subdivision budget before reaching tolerance.
    #[error("quadrature did not converge after {subdivisions} subdivisions (error estimate {estimate:e})")]
    Quadrature { subdivisions: usize, estimate: f64 },

    /// Error raised while tabulating a grid, with the offending time attached.
    #[error("at t = {t}: {source}")]
    AtTime {
        t: f64,
        #[source]
        source: Box<Error>,
    },

    /// Evolved state failed a Hermiticity / trace / positivity check.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    /// Too few usable points for a regression.
    #[error("fit failed: {0}")]
    Fit(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn validation(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Validation {
            what,
            reason: reason.into(),
        }
    }

    /// Process exit code associated with this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation { .. } | Error::Precondition(_) => 2,
            Error::Io(_) => 3,
            Error::AtTime { source, .. } => source.exit_code(),
            _ => 4,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
