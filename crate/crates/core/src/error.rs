use thiserror::Error;

/// Errors raised by the library. Unreachable weights are not errors: they
/// simply count to zero.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input lies outside the domain of the operation (rank too small,
    /// wrong root kind, mismatched dimensions, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Two routes that must agree did not. This always indicates a bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    /// Malformed textual input (vectors, root lists, throw lists).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
