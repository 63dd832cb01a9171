//! Errors for type-(r,s) data.

use exactfield::ExactError;
use mutation::MutationError;
use theta::ThetaError;
use thiserror::Error;

/// Failures raised while building or transforming type-(r,s) data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    /// Degrees or indices violate the required ordering.
    #[error("invalid degrees: {0}")]
    Degrees(String),
    /// Shapes or dimensions do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// The composition tensors are not associative or identities misbehave.
    #[error("composition law violated: {0}")]
    Composition(String),
    /// An induced composition fails to descend to a quotient or kernel.
    #[error("induced composition is not well defined: {0}")]
    NotWellDefined(String),
    /// A polarization fails its normalization or positivity conditions.
    #[error("invalid polarization: {0}")]
    Polarization(String),
    /// A JSON document could not be parsed.
    #[error("document error: {0}")]
    Document(String),
    /// Error from the space layer.
    #[error(transparent)]
    Theta(#[from] ThetaError),
    /// Error from the mutation layer.
    #[error(transparent)]
    Mutation(#[from] MutationError),
    /// Error from the linear algebra layer.
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, TypeError>;
