//! Crate-wide error type.

/// Errors surfaced by the weight, spectrum, and table machinery.
///
/// The variants map onto the CLI exit codes: `Domain` is a rejected request
/// (exit 2), `Pole` a zero/pole crossing of a spectral quotient (exit 4).
/// `Structural` flags malformed inputs such as a weight of the wrong length,
/// and `Internal` marks invariant violations that should never be reachable.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("non-constraining edge: {0}")]
    NonConstraining(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
