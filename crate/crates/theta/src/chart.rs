//! Charts: splittings used to make the mutation deterministic.

use exactfield::Matrix;

use crate::error::{Result, ThetaError};
use crate::point::MorphismPoint;
use crate::space::ThetaSpace;

/// A chart `(M0, N0, ε0, r2)`.
///
/// `m0` (an `N2 x M` matrix) and `n0` (an `N2 x N` matrix) hold bases of
/// complementary subspaces of `N2*`; `eps0` is the `N x N` matrix of
/// `ε0: N → N0` in the basis `n0`; `r2` is a `(B0·N2) x M2` right inverse of `rho2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    /// Basis of `M0 ⊂ N2*`.
    pub m0: Matrix,
    /// Basis of `N0 ⊂ N2*`.
    pub n0: Matrix,
    /// Matrix of `ε0: N → N0` relative to the basis `n0`.
    pub eps0: Matrix,
    /// Right inverse of `rho2`.
    pub r2: Matrix,
}

impl Chart {
    /// The chart with `M0` spanned by the first `dim M` coordinates, `N0` by the
    /// rest, `ε0 = I` and the echelon right inverse of `rho2`.
    pub fn standard(t: &ThetaSpace) -> Result<Chart> {
        let (f, d) = (t.field, t.dims);
        let id = Matrix::identity(f, d.n2);
        let m0 = id.block(0, 0, d.n2, d.m);
        let n0 = id.block(0, d.m, d.n2, d.n);
        let r2 = t.rho2.right_inverse().map_err(|_| ThetaError::Chart("rho2 is not surjective".into()))?;
        Ok(Chart {
            m0,
            n0,
            eps0: Matrix::identity(f, d.n),
            r2,
        })
    }

    /// Checks the chart's defining conditions against `t`.
    pub fn validate(&self, t: &ThetaSpace) -> Result<()> {
        let d = t.dims;
        if self.m0.shape() != (d.n2, d.m) || self.n0.shape() != (d.n2, d.n) || self.eps0.shape() != (d.n, d.n) {
            return Err(ThetaError::Chart("shape mismatch".into()));
        }
        if self.r2.shape() != (d.b0 * d.n2, d.m2) {
            return Err(ThetaError::Chart("r2 has the wrong shape".into()));
        }
        if !self.m0.hstack(&self.n0).is_invertible() {
            return Err(ThetaError::Chart("M0 and N0 are not complementary".into()));
        }
        if !self.eps0.is_invertible() {
            return Err(ThetaError::Chart("eps0 is not invertible".into()));
        }
        if &t.rho2 * &self.r2 != Matrix::identity(t.field, d.m2) {
            return Err(ThetaError::Chart("rho2 ∘ r2 is not the identity".into()));
        }
        Ok(())
    }

    /// Whether `w` lies in the chart domain `W(M0)`, i.e. `ker ψ̄2 ∩ M0 = 0`.
    pub fn contains(&self, w: &MorphismPoint) -> bool {
        (&w.psi2_bar() * &self.m0).is_invertible()
    }
}
