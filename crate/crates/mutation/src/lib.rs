//! Mutation of points between a space and its dual.
//!
//! [`build_dual`] constructs the dual space `D(Θ)`, [`mutate`] sends a point
//! `w ∈ W⁰` to a point of `W'⁰` for a given [`MutationChoice`], and the
//! [`transport`] module produces the dual-group elements that relate
//! mutations of points in the same orbit.

pub mod dual;
pub mod error;
pub mod mutate;
pub mod transport;
pub mod witness;

pub use dual::{build_dual, dual_dims, DoubleDual, DoubleDualReport, DualSpace};
pub use error::{MutationError, Result};
pub use mutate::{chart_splitting, default_choice, mutate, mutate_chart, mutate_default, splitting_identities, ChartSplitting, MutationChoice};
pub use transport::{decompose, dual_left_from_r, dual_right_from_b, dual_right_from_l, generator_transport, transport, Generator};
pub use witness::{choice_after_alpha0, choice_after_beta, choice_change_element, double_mutation, return_choice, sign_element};
