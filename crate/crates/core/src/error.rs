use num_rational::BigRational;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Malformed structural input (cyclic pattern, bad edge list, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An enumeration exceeded its configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A numeric domain violation (e.g. log of zero).
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector/ambient-dimension mismatch.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Text that does not conform to a grammar; `pos` is a byte offset.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A cone whose lineality space is nonzero where a pointed cone is
    /// required; carries a basis of the lineality space.
    #[error("cone is not pointed (lineality dimension {})", lineality.len())]
    NotPointed { lineality: Vec<Vec<BigRational>> },

    /// An operation precondition that was checked and failed.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
