//! Errors raised by the stability oracles.

use exactfield::ExactError;
use mutation::MutationError;
use thiserror::Error;
use typers::TypeError;

/// Failures of the stability oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    /// The enumeration would exceed its budget.
    #[error("budget exceeded: {needed} {what} needed, budget {budget}")]
    Budget {
        /// What is being enumerated.
        what: String,
        /// Number of items required.
        needed: u128,
        /// Configured maximum.
        budget: u128,
    },
    /// The oracle only runs over prime fields.
    #[error("exhaustive search requires a prime field, got {0}")]
    NotFinite(String),
    /// The Kronecker mutation needs a surjective map.
    #[error("the map is not surjective")]
    NotSurjective,
    /// The mutated multiplicity would not be positive.
    #[error("mutated dimension q·m − n = {0} is not positive")]
    NonPositiveDimension(i64),
    /// Inputs have inconsistent shapes.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// The point is outside the open set where mutation is defined.
    #[error("point is outside W0_p")]
    OutsideW0,
    /// Error from the linear algebra layer.
    #[error(transparent)]
    Exact(#[from] ExactError),
    /// Error from the mutation layer.
    #[error(transparent)]
    Mutation(#[from] MutationError),
    /// Error from the type-(r,s) layer.
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, StabilityError>;
