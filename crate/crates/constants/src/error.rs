//! Errors raised by the constants machinery.

use exactfield::ExactError;
use thiserror::Error;
use typers::TypeError;

/// Failures of the constants machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstantError {
    /// Inputs have inconsistent shapes.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// The subspace is not proper.
    #[error("subspace is not proper")]
    NotProper,
    /// The subspace lies in `H ⊗ M'` for a proper `M'`.
    #[error("subspace is not generic")]
    NotGeneric,
    /// Neither an exhaustive nor a sampled scan could run.
    #[error("no scan completed: {0}")]
    NoScan(String),
    /// The composition data has the wrong type.
    #[error("expected type (2,1), got ({r},{s})")]
    WrongType {
        /// Number of sources.
        r: usize,
        /// Number of targets.
        s: usize,
    },
    /// Error from the linear algebra layer.
    #[error(transparent)]
    Exact(#[from] ExactError),
    /// Error from the type-(r,s) layer.
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, ConstantError>;
