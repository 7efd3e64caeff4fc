//! Error taxonomy shared by every module.

use thiserror::Error;

/// Errors surfaced by the engine.
///
/// `InvariantViolation` signals a bug in the engine (a runtime check that is a
/// theorem failed), never a property of the input group.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad permutation, bad schema, bad configuration.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured resource bound was exceeded.
    #[error("resource bound exceeded: {0}")]
    ResourceLimit(String),

    /// A value fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A runtime check that should hold by theory failed; indicates a bug.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
