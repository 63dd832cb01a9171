//! Errors of the command-line front end and their exit codes.

use thiserror::Error;

/// Failures reported by a command.
#[derive(Debug, Error)]
pub enum CliError {
    /// Missing or inconsistent arguments.
    #[error("usage: {0}")]
    Usage(String),
    /// An input file could not be read or decoded.
    #[error("parse: {0}")]
    Parse(String),
    /// A mathematical precondition or check failed.
    #[error("{0}")]
    Failure(String),
    /// Reading or writing failed.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// `1` for mathematical failures and `2` for every other error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            _ => 2,
        }
    }
}

macro_rules! failure_from {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Failure(e.to_string())
            }
        })*
    };
}

failure_from!(
    exactfield::ExactError,
    mutation::MutationError,
    typers::TypeError,
    stability::StabilityError,
    constants::ConstantError,
    thresholds::ThresholdError
);

impl From<theta::ThetaError> for CliError {
    fn from(e: theta::ThetaError) -> Self {
        CliError::Parse(e.to_string())
    }
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, CliError>;
