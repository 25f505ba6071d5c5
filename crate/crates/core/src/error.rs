use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the formula is valid.
    #[error("domain error: {0}")]
    Domain(String),
    /// The function being differentiated vanishes at the evaluation point.
    #[error("pole: {0}")]
    Pole(String),
    /// Malformed or inconsistent input.
    #[error("input error: {0}")]
    Input(String),
    /// Text could not be parsed.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// A configured size cap was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// A semigroup construction precondition failed.
    #[error("construction error: {0}")]
    Construction(String),
    /// An internal invariant was violated; indicates a bug.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
