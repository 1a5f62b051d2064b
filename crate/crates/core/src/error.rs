use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is not available for these parameters.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An exactness or integrality check failed. This always indicates
    /// malformed input or a bug, never a rounding issue.
    #[error("consistency failure: {0}")]
    Consistency(String),

    /// A brute-force enumeration would exceed the configured budget.
    #[error("enumeration of {required} items exceeds budget {budget}")]
    Budget { required: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn consistency(msg: impl Into<String>) -> Error {
    Error::Consistency(msg.into())
}
