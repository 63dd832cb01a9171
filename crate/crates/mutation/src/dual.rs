//! The dual space `D(Θ)` and the identification of `D(D(Θ))` with `Θ`.
//!
//! For `Θ` with maps `rho1, rho2, mu, nu` the dual has
//!
//! * `N1' = B0`, `N2' = N2*`, `M1' = M1`, `B0' = N1`, `M' = N`, `N' = M`;
//! * `A0' = ker rho2 ⊂ B0 ⊗ N2`, with basis the columns of [`DualSpace::kernel_rho2`];
//! * `M2' = (N1 ⊗ N2*) / nu_bar(A0)`, with projection and section recorded.
//!
//! The structure maps are `rho1'` (rho1 with the tensor factors swapped),
//! `rho2'` (the quotient projection), `nu'` (the contraction `N2* ⊗ A0' → B0`)
//! and `mu'(y ⊗ α') = rho1(X · S(y)ᵀ)`, where `X` is `α'` as a `B0 x N2` matrix
//! and `S(y)` is the section of `y` as an `N1 x N2` matrix.

use exactfield::{quotient_data, swap_matrix, Matrix, Subspace};
use theta::{Dims, MorphismPoint, ThetaSpace};

use crate::error::{MutationError, Result};

/// The dual space together with the data identifying its pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSpace {
    /// The dual as a space in its own right.
    pub theta: ThetaSpace,
    /// `(B0·N2) x A0'` basis of `ker rho2`.
    pub kernel_rho2: Matrix,
    /// Left inverse of `kernel_rho2`, giving coordinates in `A0'`.
    pub kernel_coords: Matrix,
    /// `M2' x (N1·N2)` projection onto `M2'`.
    pub projection: Matrix,
    /// `(N1·N2) x M2'` section of the projection.
    pub section: Matrix,
}

/// Dimensions of the dual of a space with dimensions `d`.
pub fn dual_dims(d: Dims) -> Dims {
    Dims {
        n1: d.b0,
        n2: d.n2,
        m1: d.m1,
        m2: d.n1 * d.n2 - d.a0,
        a0: d.b0 * d.n2 - d.m2,
        b0: d.n1,
        m: d.n,
        n: d.m,
    }
}

/// Builds `D(Θ)`.
pub fn build_dual(t: &ThetaSpace) -> Result<DualSpace> {
    let rep = t.validate();
    if !rep.passed() {
        let failed: Vec<&str> = rep.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        return Err(MutationError::InvalidTheta(failed.join(", ")));
    }
    let (f, d) = (t.field, t.dims);
    let dd = dual_dims(d);
    let kernel_rho2 = t.rho2.kernel();
    let kernel_coords = kernel_rho2.left_inverse()?;
    let image = Subspace::span(&t.nu_bar_matrix());
    let qd = quotient_data(d.n1 * d.n2, &image)?;

    let rho1 = &t.rho1 * &swap_matrix(f, d.n1, d.b0);
    let rho2 = qd.projection.clone();

    let mut nu = Matrix::zeros(f, dd.n1, dd.n2 * dd.a0);
    for b in 0..d.b0 {
        for a in 0..d.n2 {
            for j in 0..dd.a0 {
                nu.set(b, a * dd.a0 + j, kernel_rho2.get(b * d.n2 + a, j).clone());
            }
        }
    }

    let mut mu = Matrix::zeros(f, dd.m1, dd.m2 * dd.a0);
    for y in 0..dd.m2 {
        let sy = qd.section.col(y).reshape(d.n1, d.n2);
        for j in 0..dd.a0 {
            let x = kernel_rho2.col(j).reshape(d.b0, d.n2);
            let val = &t.rho1 * &(&x * &sy.transpose()).vectorize();
            for r in 0..dd.m1 {
                mu.set(r, y * dd.a0 + j, val.get(r, 0).clone());
            }
        }
    }

    let theta = ThetaSpace::new(f, dd, rho1, rho2, mu, nu)?;
    Ok(DualSpace {
        theta,
        kernel_rho2,
        kernel_coords,
        projection: qd.projection,
        section: qd.section,
    })
}

impl DualSpace {
    /// Coordinates in `A0'` of a `B0 x N2` matrix lying in `ker rho2`.
    pub fn a0_coords(&self, x: &Matrix) -> Result<Matrix> {
        let v = x.vectorize();
        let c = &self.kernel_coords * &v;
        if &self.kernel_rho2 * &c != v {
            return Err(MutationError::BadChoice("element is not in ker rho2".into()));
        }
        Ok(c)
    }
}

/// The identification of `D(D(Θ))` with `Θ`.
///
/// `iota` sends `A0` into `A0''` and `j` is the isomorphism `M2'' → M2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleDual {
    /// The first dual.
    pub first: DualSpace,
    /// The dual of the first dual.
    pub second: DualSpace,
    /// `A0'' x A0` matrix of the identification `A0 → A0''`.
    pub iota: Matrix,
    /// `M2 x M2''` matrix of the identification `M2'' → M2`.
    pub j: Matrix,
}

/// Outcome of comparing `D(D(Θ))` with `Θ` through [`DoubleDual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleDualReport {
    /// Whether the dimensions agree.
    pub dims: bool,
    /// `rho1'' = rho1`.
    pub rho1: bool,
    /// `rho2 = J ∘ rho2''`.
    pub rho2: bool,
    /// `nu = nu'' ∘ (I ⊗ iota)`.
    pub nu: bool,
    /// `mu = mu'' ∘ (J⁻¹ ⊗ iota)`.
    pub mu: bool,
}

impl DoubleDualReport {
    /// Whether every comparison succeeded.
    pub fn passed(&self) -> bool {
        self.dims && self.rho1 && self.rho2 && self.nu && self.mu
    }
}

impl DoubleDual {
    /// Builds both duals and the identification maps.
    pub fn new(t: &ThetaSpace) -> Result<DoubleDual> {
        let first = build_dual(t)?;
        let second = build_dual(&first.theta)?;
        let iota = &second.kernel_coords * &t.nu_bar_matrix();
        let j = &t.rho2 * &second.section;
        Ok(DoubleDual { first, second, iota, j })
    }

    /// Compares the structure maps of `D(D(Θ))` with those of `t`.
    pub fn report(&self, t: &ThetaSpace) -> DoubleDualReport {
        let tt = &self.second.theta;
        let f = t.field;
        let dims = tt.dims == t.dims;
        if !dims {
            return DoubleDualReport {
                dims,
                rho1: false,
                rho2: false,
                nu: false,
                mu: false,
            };
        }
        let d = t.dims;
        let j_inv = self.j.inverse().ok();
        DoubleDualReport {
            dims,
            rho1: tt.rho1 == t.rho1,
            rho2: &self.j * &tt.rho2 == t.rho2,
            nu: &tt.nu * &Matrix::identity(f, d.n2).kron(&self.iota) == t.nu,
            mu: j_inv.is_some_and(|ji| &tt.mu * &ji.kron(&self.iota) == t.mu),
        }
    }

    /// Transports a point of `D(D(Θ))` to `Θ`.
    pub fn pull_point(&self, w: &MorphismPoint) -> MorphismPoint {
        MorphismPoint {
            psi1: w.psi1.clone(),
            psi2: w.psi2.clone(),
            phi1: w.phi1.clone(),
            phi2: &self.j * &w.phi2,
        }
    }
}
