//! Exact quotient-existence conditions and singular values for morphisms of type (2,1).
//!
//! Every comparison is carried out on exact rationals. Conditions are collected into a
//! [`ThresholdReport`] so the first failing inequality can be named.

pub mod error;
pub mod examples;
pub mod report;
pub mod sweep;
pub mod theorems;

pub use error::{Result, ThresholdError};
pub use examples::{
    count_pieces, detect_singular, is_singular, singular_values_ex1, singular_values_ex2, Balance, Example1, Example2,
    SingularScan,
};
pub use report::{Condition, ConditionDoc, Relation, ReportDoc, ThresholdReport};
pub use sweep::{sweep, sweep_points, write_csv, SweepRow, SweepSpec};
pub use theorems::{thm53_ok, thm56_range, thm59_ok, thm59_projective, thm64_ok, Case, HomDims, ThresholdInput};
