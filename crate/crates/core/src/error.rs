use thiserror::Error;

/// Errors raised by the graph-entropy library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A mathematical precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The graph is not connected.
    #[error("graph is not connected")]
    Disconnected,
    /// Malformed edge-list input.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A computed result contradicts an invariant that should always hold.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
