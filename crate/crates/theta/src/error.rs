//! Errors for abstract morphism spaces.

use exactfield::ExactError;
use thiserror::Error;

/// Failures raised while building or using a [`crate::ThetaSpace`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    /// A matrix or point does not have the shape required by the space.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A group element violates a compatibility axiom with the structure maps.
    #[error("group element is not compatible with the structure maps: {0}")]
    Equivariance(String),
    /// A chart violates one of its defining conditions.
    #[error("invalid chart: {0}")]
    Chart(String),
    /// A serialized document could not be decoded.
    #[error("malformed document: {0}")]
    Document(String),
    /// Underlying linear algebra failure.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, ThetaError>;
