//! Genericity of subspaces and the codimension ratio `δ(K)`.

use exactfield::{BigRational, Matrix, Subspace};

use crate::error::{ConstantError, Result};
use crate::tau::TauMap;

/// Reads `u ∈ H ⊗ M` (a column of length `h·m`) as an `h x m` matrix.
pub fn as_matrix(u: &Matrix, h: usize, m: usize) -> Matrix {
    u.reshape(h, m)
}

/// The length of `u ∈ H ⊗ M`: the rank of `u` read as a map `H* → M`.
pub fn length(u: &Matrix, h: usize, m: usize) -> usize {
    as_matrix(u, h, m).rank()
}

/// The smallest `M' ⊂ M` with `K ⊂ H ⊗ M'`.
pub fn support(k: &Subspace, h: usize, m: usize) -> Subspace {
    let f = k.field();
    let rows: Vec<Matrix> = (0..k.dim()).map(|c| as_matrix(&k.basis().col(c), h, m)).collect();
    Subspace::span(&Matrix::vcat(f, m, &rows).transpose())
}

/// Whether `K ⊂ H ⊗ M` is proper and lies in no `H ⊗ M'` with `M'` proper.
pub fn is_generic(k: &Subspace, h: usize, m: usize) -> Result<bool> {
    if k.ambient_dim() != h * m {
        return Err(ConstantError::Dimension(format!("subspace of dimension {} is not in H⊗M = {}", k.ambient_dim(), h * m)));
    }
    if k.dim() == h * m {
        return Err(ConstantError::NotProper);
    }
    Ok(support(k, h, m).dim() == m)
}

/// `codim τ_m(E ⊗ K) / codim K` for a generic `K ⊂ H ⊗ M`.
pub fn delta(t: &TauMap, k: &Subspace, m: usize) -> Result<BigRational> {
    if !is_generic(k, t.h, m)? {
        return Err(ConstantError::NotGeneric);
    }
    Ok(delta_unchecked(t, &t.tau_m(m), k, m))
}

pub(crate) fn delta_unchecked(t: &TauMap, tau_m: &Matrix, k: &Subspace, m: usize) -> BigRational {
    let f = t.field();
    let image = tau_m * &Matrix::identity(f, t.e).kron(k.basis());
    let codim_image = t.f * m - image.rank();
    let codim_k = t.h * m - k.dim();
    BigRational::new((codim_image as i64).into(), (codim_k as i64).into())
}

/// The line spanned by `Σ_{i<m} e_i ⊗ x_i`, a tensor of length `m` (requires `m ≤ dim H`).
pub fn rank_one_witness(t: &TauMap, m: usize) -> Option<Subspace> {
    (m >= 1 && m <= t.h).then(|| {
        let f = t.field();
        let mut u = Matrix::zeros(f, t.h * m, 1);
        for i in 0..m {
            u.set(i * m + i, 0, f.one());
        }
        Subspace::span(&u)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactfield::{rat, Field};

    const Q: Field = Field::Rationals;

    #[test]
    fn lengths() {
        let u = Matrix::column_i64(Q, &[1, 0, 0, 0, 0, 0]);
        assert_eq!(length(&u, 3, 2), 1);
        let u = Matrix::column_i64(Q, &[1, 0, 0, 1, 0, 0]);
        assert_eq!(length(&u, 3, 2), 2);
        assert_eq!(length(&Matrix::zeros(Q, 6, 1), 3, 2), 0);
    }

    #[test]
    fn genericity() {
        let pure = Subspace::span(&Matrix::column_i64(Q, &[1, 0, 0, 0, 0, 0]));
        assert!(!is_generic(&pure, 3, 2).unwrap());
        let mixed = Subspace::span(&Matrix::column_i64(Q, &[1, 0, 0, 1, 0, 0]));
        assert!(is_generic(&mixed, 3, 2).unwrap());
        assert_eq!(is_generic(&Subspace::full(Q, 6), 3, 2), Err(ConstantError::NotProper));
    }

    #[test]
    fn sigma_witness_values() {
        let s0 = TauMap::sigma0(Q, 2);
        let k1 = rank_one_witness(&s0, 1).unwrap();
        assert_eq!(delta(&s0, &k1, 1).unwrap(), rat(0, 1));
        let k2 = rank_one_witness(&s0, 2).unwrap();
        assert_eq!(delta(&s0, &k2, 2).unwrap(), rat(1, 5));
        let s1 = TauMap::sigma1(Q, 2);
        assert_eq!(delta(&s1, &rank_one_witness(&s1, 2).unwrap(), 2).unwrap(), rat(9, 5));
        let pure = Subspace::span(&Matrix::column_i64(Q, &[1, 0, 0, 0, 0, 0]));
        assert_eq!(delta(&s0, &pure, 2), Err(ConstantError::NotGeneric));
    }
}
