//! Errors raised by the threshold evaluators.

use thiserror::Error;

/// Failures of the threshold evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThresholdError {
    /// An input is outside its allowed range.
    #[error("invalid input: {0}")]
    Input(String),
    /// Writing CSV failed.
    #[error("csv: {0}")]
    Csv(String),
}

impl From<csv::Error> for ThresholdError {
    fn from(e: csv::Error) -> Self {
        ThresholdError::Csv(e.to_string())
    }
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, ThresholdError>;
