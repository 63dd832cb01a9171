//! The constants `c_τ(m)` with their closed forms and the scans that bound them.
//!
//! For `τ: E ⊗ H → F` and `M = k^m`, a proper subspace `K ⊂ H ⊗ M` is generic
//! when it lies in no `H ⊗ M'` with `M' ⊊ M`. The constant `c_τ(m)` is the
//! supremum of `codim τ_m(E ⊗ K) / codim K` over generic `K`. This crate
//! certifies lower bounds and scans for values above a reference.

pub mod delta;
pub mod error;
pub mod formula;
pub mod search;
pub mod tau;

pub use delta::{delta, is_generic, length, rank_one_witness, support};
pub use error::{ConstantError, Result};
pub use formula::{branch, c_branch, c_formula, Branch};
pub use search::{c_tau_rs, c_tau_search, random_subspace, ScanMode, SearchConfig, SearchDoc, SearchReport};
pub use tau::{Sigma, TauMap};
