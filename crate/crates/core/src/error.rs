use thiserror::Error;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates the operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal structural assumption failed (a caller bug, not bad input).
    #[error("structural error: {0}")]
    Structural(String),
    /// The requested computation exceeds a configured resource cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
pub(crate) use domain;
