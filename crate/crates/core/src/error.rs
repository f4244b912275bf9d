use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rejected model parameters (even `r`, `nu <= -1/2`, ...).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An argument outside the documented range of an operation.
    #[error("argument out of range: {0}")]
    Argument(String),

    /// Evaluation or integration outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal identity did not hold. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("could not parse rational {input:?}: {reason}")]
    ParseRational { input: String, reason: String },

    #[error("export failed: {0}")]
    Export(String),
}
