//! Exact linear algebra over the rationals and prime fields.
//!
//! Every computation in the workspace runs on [`Matrix`] values whose entries
//! are [`Scalar`]s: reduced big rationals or residues modulo a prime below
//! `2^16`. No floating point is used anywhere.

pub mod enumerate;
pub mod error;
pub mod field;
pub mod matrix;
pub mod subspace;
pub mod tensor;

pub use enumerate::{all_vectors, enumerate_subspaces, for_each_subspace, gaussian_binomial, total_subspace_count};
pub use error::{ExactError, Result};
pub use field::{format_rational, format_rational_frac, parse_rational, rat, Field, Scalar};
pub use matrix::{solve_linear, Matrix, MatrixDoc, Rref};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use subspace::{quotient_data, QuotientData, Subspace};
pub use tensor::{contract_pair, pair_index, swap_matrix, triple_index};

/// The kernel of `a` as a [`Subspace`].
pub fn kernel_basis(a: &Matrix) -> Subspace {
    Subspace::kernel_of(a)
}
