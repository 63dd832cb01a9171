//! Points `w = (ψ1, ψ2, φ1, φ2)` of the total space `W`.

use exactfield::Matrix;

use crate::error::{Result, ThetaError};
use crate::space::ThetaSpace;

/// A point of the total space of a [`ThetaSpace`].
///
/// `psi1` is an `N1 x M` matrix (an element of `N1 ⊗ M`), `psi2` an `N2 x M`
/// matrix, and `phi1`, `phi2` are column vectors in `M1` and `M2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorphismPoint {
    /// Component in `N1 ⊗ M`.
    pub psi1: Matrix,
    /// Component in `N2 ⊗ M`.
    pub psi2: Matrix,
    /// Component in `M1`.
    pub phi1: Matrix,
    /// Component in `M2`.
    pub phi2: Matrix,
}

impl MorphismPoint {
    /// Builds a point after checking it against the host space.
    pub fn new(t: &ThetaSpace, psi1: Matrix, psi2: Matrix, phi1: Matrix, phi2: Matrix) -> Result<MorphismPoint> {
        let w = MorphismPoint { psi1, psi2, phi1, phi2 };
        w.check(t)?;
        Ok(w)
    }

    /// The zero point.
    pub fn zero(t: &ThetaSpace) -> MorphismPoint {
        let d = t.dims;
        let f = t.field;
        MorphismPoint {
            psi1: Matrix::zeros(f, d.n1, d.m),
            psi2: Matrix::zeros(f, d.n2, d.m),
            phi1: Matrix::zeros(f, d.m1, 1),
            phi2: Matrix::zeros(f, d.m2, 1),
        }
    }

    /// Verifies the component shapes against `t`.
    pub fn check(&self, t: &ThetaSpace) -> Result<()> {
        let d = t.dims;
        let expect = [
            ("psi1", &self.psi1, d.n1, d.m),
            ("psi2", &self.psi2, d.n2, d.m),
            ("phi1", &self.phi1, d.m1, 1),
            ("phi2", &self.phi2, d.m2, 1),
        ];
        for (name, m, r, c) in expect {
            if m.shape() != (r, c) || m.field() != t.field {
                return Err(ThetaError::Dimension(format!(
                    "{name} is {}x{} over {}, expected {r}x{c} over {}",
                    m.rows(),
                    m.cols(),
                    m.field(),
                    t.field
                )));
            }
        }
        Ok(())
    }

    /// The induced map `ψ̄2: N2* → M`, as an `M x N2` matrix.
    pub fn psi2_bar(&self) -> Matrix {
        self.psi2.transpose()
    }

    /// Rank deficit of `ψ̄2` relative to `dim M` (zero exactly on `W⁰`).
    pub fn w0_deficit(&self) -> usize {
        self.psi2.cols() - self.psi2.rank()
    }
}

/// Whether `ψ̄2: N2* → M` is surjective.
pub fn in_w0(w: &MorphismPoint) -> bool {
    w.w0_deficit() == 0
}
