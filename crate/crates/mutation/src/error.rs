//! Errors for dual spaces and mutations.

use exactfield::ExactError;
use theta::ThetaError;
use thiserror::Error;

/// Failures raised by the mutation machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    /// The input space fails one of its defining conditions.
    #[error("invalid space: {0}")]
    InvalidTheta(String),
    /// The point is not in `W⁰`.
    #[error("point is not in W0: rank deficit {0}")]
    NotInW0(usize),
    /// A mutation choice violates its defining equations.
    #[error("inconsistent mutation choice: {0}")]
    BadChoice(String),
    /// The point lies outside the chart domain `W(M0)`.
    #[error("point is outside the chart domain")]
    OutsideChart,
    /// A group element is not of a supported shape.
    #[error("unsupported group element: {0}")]
    Unsupported(String),
    /// Error from the space layer.
    #[error(transparent)]
    Theta(#[from] ThetaError),
    /// Error from the linear algebra layer.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, MutationError>;
