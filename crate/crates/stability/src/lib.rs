//! Exhaustive finite-field (semi)stability oracles.
//!
//! The Kronecker oracle tests the slope condition on every subspace of `M`; the
//! type-`(r,s)` oracle tests every family of subspaces of the multiplicity
//! spaces, optionally along the orbit of the unipotent radical. The comparison
//! harness relates the verdict of a point to the verdict of its mutation.

pub mod compare;
pub mod error;
pub mod kronecker;
pub mod rs;
pub mod verdict;

pub use compare::{compare_stability, hypotheses, mutate_rs, require_w0, ComparisonReport, Hypotheses, Implication};
pub use error::{Result, StabilityError};
pub use kronecker::{all_subspaces, general_linear_group, in_orbit, kronecker_mutate, kronecker_semistable, KroneckerModule};
pub use rs::{is_semistable_rs, minimal_targets, unipotent_elements, unipotent_orbit, FamilyMode, GroupMode, SearchOptions};
pub use verdict::{StabilityVerdict, Witness, WitnessDoc};
