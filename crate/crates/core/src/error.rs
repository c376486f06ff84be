use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma evaluated at zero or a negative integer.
    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series hit its term cap before the stopping rule fired.
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    /// A time power exceeded the term algebra cap, or a coefficient left the guarded range.
    #[error("term algebra overflow: {0}")]
    Overflow(String),

    /// Input sequences have incompatible lengths.
    #[error("length error: expected {expected}, got {actual}")]
    Length { expected: usize, actual: usize },

    /// Observations that cannot define a rate (repeated time stamps).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A value violates a type invariant.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Error {
    Error::Invalid {
        what,
        reason: reason.into(),
    }
}
