//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested on a singular set (tangent pole, caustic,
    /// coordinate axis, ...).
    #[error("singularity: {0}")]
    Singularity(String),

    /// A gamma-function pole was hit.
    #[error("pole: {0}")]
    Pole(String),

    /// The operation is deliberately not supported (see module non-goals).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Quantum numbers excluded by a selection rule (e.g. V2 odd quanta).
    #[error("excluded state: {0}")]
    Exclusion(String),

    /// Malformed configuration document.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn singularity(msg: impl Into<String>) -> Self {
        Error::Singularity(msg.into())
    }
    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
