//! Error type shared by the exact linear algebra routines.

use thiserror::Error;

/// Failures reported by fallible linear algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Two operands have incompatible shapes.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Operands live over different fields.
    #[error("mixed fields: {0} and {1}")]
    MixedFields(String, String),
    /// The linear system has no solution.
    #[error("linear system has no solution")]
    NoSolution,
    /// A matrix expected to be invertible is singular.
    #[error("matrix is singular")]
    Singular,
    /// The requested prime is not a prime below 2^16.
    #[error("invalid prime modulus {0}")]
    BadPrime(u32),
    /// A configured enumeration budget would be exceeded.
    #[error("budget exceeded: {needed} items requested, budget {budget}")]
    Budget {
        /// Number of items the enumeration would produce.
        needed: u128,
        /// Configured maximum.
        budget: u128,
    },
    /// A subspace does not fit the declared ambient space.
    #[error("subspace does not fit ambient space: {0}")]
    Ambient(String),
    /// A scalar string could not be parsed.
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, ExactError>;
