use std::fmt;

/// Error type shared by every evaluation routine in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum WrightError {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Input outside the supported numerical range.
    Range(String),
    /// A series failed to converge within the term cap.
    Convergence { context: String, terms: usize, last_term_log: f64 },
    /// A result (or a required intermediate) left the representable range.
    Overflow(String),
    /// An iterative solver failed.
    Numerical(String),
    /// Quadrature finished but could not meet the requested tolerance.
    Accuracy { context: String, estimate: f64, requested: f64 },
}

impl fmt::Display for WrightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WrightError::Domain(msg) => write!(f, "domain error: {msg}"),
            WrightError::Range(msg) => write!(f, "range error: {msg}"),
            WrightError::Convergence { context, terms, last_term_log } => write!(
                f,
                "convergence error: {context} did not converge after {terms} terms (last term log-magnitude {last_term_log:.3e})"
            ),
            WrightError::Overflow(msg) => write!(f, "overflow error: {msg}"),
            WrightError::Numerical(msg) => write!(f, "numerical error: {msg}"),
            WrightError::Accuracy { context, estimate, requested } => write!(
                f,
                "accuracy error: {context} reached error estimate {estimate:.3e} but {requested:.3e} was requested"
            ),
        }
    }
}

impl std::error::Error for WrightError {}

impl WrightError {
    /// True for input-validation failures (CLI exit code 2), false for
    /// numerical failures (CLI exit code 3).
    pub fn is_validation(&self) -> bool {
        matches!(self, WrightError::Domain(_) | WrightError::Range(_))
    }
}

pub type Result<T> = std::result::Result<T, WrightError>;
