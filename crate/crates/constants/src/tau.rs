//! Bilinear maps `τ: E ⊗ H → F` and the two maps on symmetric powers.

use exactfield::{Field, Matrix};
use typers::{monomials, multiplication_tensor, HomData};

use crate::error::{ConstantError, Result};

/// A linear map `E ⊗ H → F`, stored as an `F x (E·H)` matrix with column index `(e, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauMap {
    /// `dim E`.
    pub e: usize,
    /// `dim H`.
    pub h: usize,
    /// `dim F`.
    pub f: usize,
    /// The map.
    pub tau: Matrix,
}

/// Selects one of the two maps on `V = k^(n+1)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sigma {
    /// Contraction `S²V ⊗ V* → V`.
    Zero,
    /// Multiplication `V ⊗ V → S²V`.
    One,
}

impl TauMap {
    /// Builds a map, checking the shape.
    pub fn new(e: usize, h: usize, f: usize, tau: Matrix) -> Result<TauMap> {
        if tau.shape() != (f, e * h) {
            return Err(ConstantError::Dimension(format!("map is {}x{}, expected {f}x{}", tau.rows(), tau.cols(), e * h)));
        }
        Ok(TauMap { e, h, f, tau })
    }

    /// The base field.
    pub fn field(&self) -> Field {
        self.tau.field()
    }

    /// `τ_m = τ ⊗ I_M` with columns `(e, h, x)` and rows `(f, x)`.
    pub fn tau_m(&self, m: usize) -> Matrix {
        self.tau.kron(&Matrix::identity(self.field(), m))
    }

    /// The same map over another field, reading every entry as a rational.
    pub fn over(&self, field: Field) -> Result<TauMap> {
        let mut out = Matrix::zeros(field, self.f, self.e * self.h);
        for i in 0..self.f {
            for j in 0..self.e * self.h {
                out.set(i, j, field.from_rational(&self.tau.get(i, j).to_rational())?);
            }
        }
        TauMap::new(self.e, self.h, self.f, out)
    }

    /// The contraction `S²V ⊗ V* → V` on symmetric tensors, `dim V = n + 1`.
    ///
    /// The basis vector of `S²V` indexed by `x_j x_k` is `e_j ⊗ e_k + e_k ⊗ e_j` for
    /// `j < k` and `e_j ⊗ e_j` for `j = k`; contraction is on the first factor.
    pub fn sigma0(field: Field, n: usize) -> TauMap {
        let v = n + 1;
        let mons = monomials(v, 2);
        let mut tau = Matrix::zeros(field, v, mons.len() * v);
        for (q, mon) in mons.iter().enumerate() {
            let support: Vec<usize> = (0..v).filter(|&i| mon[i] > 0).collect();
            let (j, k) = if support.len() == 1 { (support[0], support[0]) } else { (support[0], support[1]) };
            for z in 0..v {
                let col = q * v + z;
                if z == j {
                    tau.add_at(k, col, &field.one());
                }
                if z == k && j != k {
                    tau.add_at(j, col, &field.one());
                }
            }
        }
        TauMap { e: mons.len(), h: v, f: v, tau }
    }

    /// The multiplication `V ⊗ V → S²V`, `dim V = n + 1`.
    pub fn sigma1(field: Field, n: usize) -> TauMap {
        let v = n + 1;
        let tau = multiplication_tensor(field, v, 1, 1);
        TauMap { e: v, h: v, f: tau.rows(), tau }
    }

    /// One of the two maps on `V = k^(n+1)`.
    pub fn sigma(which: Sigma, field: Field, n: usize) -> TauMap {
        match which {
            Sigma::Zero => TauMap::sigma0(field, n),
            Sigma::One => TauMap::sigma1(field, n),
        }
    }

    /// For type-(2,1) data, the map `H11* ⊗ A21 → H12*` deduced from the composition
    /// `H12 ⊗ A21 → H11`.
    pub fn from_hom_data(hd: &HomData) -> Result<TauMap> {
        let comp = composition(hd)?;
        let (h11, h12, a21) = (hd.h[0][0], hd.h[0][1], hd.a[1][0]);
        let tau = Matrix::from_fn(hd.field, h12, h11 * a21, |y, col| {
            let (u, a) = (col / a21, col % a21);
            comp.get(u, y * a21 + a).clone()
        });
        TauMap::new(h11, a21, h12, tau)
    }

    /// For type-(2,1) data, the composition `H12 ⊗ A21 → H11` itself.
    pub fn dual_from_hom_data(hd: &HomData) -> Result<TauMap> {
        let comp = composition(hd)?;
        TauMap::new(hd.h[0][1], hd.a[1][0], hd.h[0][0], comp)
    }
}

fn composition(hd: &HomData) -> Result<Matrix> {
    if hd.r != 2 || hd.s != 1 {
        return Err(ConstantError::WrongType { r: hd.r, s: hd.s });
    }
    Ok(hd.ha(0, 1, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use typers::projective_space_hom_data;

    const Q: Field = Field::Rationals;

    #[test]
    fn shapes() {
        let s0 = TauMap::sigma0(Q, 2);
        assert_eq!((s0.e, s0.h, s0.f), (6, 3, 3));
        let s1 = TauMap::sigma1(Q, 2);
        assert_eq!((s1.e, s1.h, s1.f), (3, 3, 6));
        assert!(TauMap::new(1, 2, 1, Matrix::zeros(Q, 1, 3)).is_err());
    }

    #[test]
    fn contraction_of_a_square() {
        let s0 = TauMap::sigma0(Q, 1);
        assert_eq!(s0.tau.get(0, 0), &Q.one());
        assert!(s0.tau.get(1, 0).is_zero() && s0.tau.get(0, 1).is_zero());
        assert_eq!(s0.tau.get(1, 2), &Q.one());
        assert_eq!(s0.tau.get(0, 3), &Q.one());
    }

    #[test]
    fn line_bundle_maps() {
        let hd = projective_space_hom_data(Q, 2, &[-2, -1], &[0]).unwrap();
        let t = TauMap::from_hom_data(&hd).unwrap();
        assert_eq!((t.e, t.h, t.f), (6, 3, 3));
        let ts = TauMap::dual_from_hom_data(&hd).unwrap();
        assert_eq!((ts.e, ts.h, ts.f), (3, 3, 6));
        assert_eq!(ts.tau.rank(), TauMap::sigma1(Q, 2).tau.rank());
        let bad = projective_space_hom_data(Q, 2, &[0], &[1]).unwrap();
        assert_eq!(TauMap::from_hom_data(&bad), Err(ConstantError::WrongType { r: 1, s: 1 }));
    }
}
