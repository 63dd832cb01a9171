//! Tensor contractions in coordinates.
//!
//! Elements of `E ⊗ K` are stored as `dim E x dim K` matrices with the left
//! factor indexing rows, matching the left-factor-major ordering of
//! [`Matrix::kron`].

use crate::error::{ExactError, Result};
use crate::matrix::Matrix;

/// Contracts `phi ∈ E ⊗ K` with `psi ∈ K* ⊗ F` over `K`, giving the element of
/// `E ⊗ F` with coordinates `Σ_k phi[e][k] psi[k][f]`.
pub fn contract_pair(phi: &Matrix, psi: &Matrix) -> Result<Matrix> {
    if phi.cols() != psi.rows() {
        return Err(ExactError::Shape(format!(
            "contraction over K of dimension {} and {}",
            phi.cols(),
            psi.rows()
        )));
    }
    phi.try_mul(psi)
}

/// Index of `(i, j)` in a left-factor-major product of dimensions `(_, d2)`.
pub fn pair_index(i: usize, j: usize, d2: usize) -> usize {
    i * d2 + j
}

/// Index of `(i, j, k)` in a left-factor-major triple product.
pub fn triple_index(i: usize, j: usize, k: usize, d2: usize, d3: usize) -> usize {
    (i * d2 + j) * d3 + k
}

/// Permutation matrix sending coordinates of `A ⊗ B` to those of `B ⊗ A`.
pub fn swap_matrix(field: crate::Field, da: usize, db: usize) -> Matrix {
    let mut m = Matrix::zeros(field, da * db, da * db);
    for a in 0..da {
        for b in 0..db {
            m.set(b * da + a, a * db + b, field.one());
        }
    }
    m
}
