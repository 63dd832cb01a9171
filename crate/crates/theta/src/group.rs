//! Elements of the groups `G_R`, `G_L` and their actions on `W`.
//!
//! The groups `R`, `B`, `L` are represented by their concrete linear actions:
//!
//! * an element of `R` acts on the right of `N1`, `M1`, `A0`;
//! * an element of `B` acts on the right of `N2`, `M2` and on the left of `A0`;
//! * an element of `L` acts on the left of `M1`, `M2`, `B0`.
//!
//! A right action `x ↦ x·g` is stored as the matrix `X` with `x·g = X x`, so the
//! matrix of a product `g g'` is `X(g') X(g)`.

use exactfield::{Field, Matrix, Scalar};

use crate::error::{Result, ThetaError};
use crate::point::MorphismPoint;
use crate::space::ThetaSpace;

/// An element `(r, α0, b)` of `G_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightElement {
    /// Action of `r` on `N1`.
    pub r_n1: Matrix,
    /// Action of `r` on `M1`.
    pub r_m1: Matrix,
    /// Action of `r` on `A0`.
    pub r_a0: Matrix,
    /// Unipotent part, a column vector in `A0`.
    pub alpha0: Matrix,
    /// Action of `b` on `N2`.
    pub b_n2: Matrix,
    /// Action of `b` on `M2`.
    pub b_m2: Matrix,
    /// Left action of `b` on `A0`.
    pub b_a0: Matrix,
}

/// An element `(g_M, β, ℓ)` of `G_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftElement {
    /// Invertible `M x M` matrix.
    pub g_m: Matrix,
    /// Unipotent part: a `B0 x M` matrix, the map `M → B0`.
    pub beta: Matrix,
    /// Action of `ℓ` on `M1`.
    pub l_m1: Matrix,
    /// Action of `ℓ` on `M2`.
    pub l_m2: Matrix,
    /// Action of `ℓ` on `B0`.
    pub l_b0: Matrix,
}

/// An element of `G_R` or of `G_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupElement {
    /// Element of `G_L`, acting on the left.
    Left(LeftElement),
    /// Element of `G_R`, acting on the right.
    Right(RightElement),
}

/// An element of `G = G_R^op × G_L`, acting by `w ↦ g_L (w g_R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairElement {
    /// Right component.
    pub right: RightElement,
    /// Left component.
    pub left: LeftElement,
}

fn scalar_id(f: Field, n: usize, c: &Scalar) -> Matrix {
    Matrix::scalar(f, n, c)
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(ThetaError::Equivariance(what.to_string()))
    }
}

fn require_shape(m: &Matrix, r: usize, c: usize, what: &str) -> Result<()> {
    if m.shape() == (r, c) {
        Ok(())
    } else {
        Err(ThetaError::Dimension(format!(
            "{what} is {}x{}, expected {r}x{c}",
            m.rows(),
            m.cols()
        )))
    }
}

fn require_invertible(m: &Matrix, what: &str) -> Result<()> {
    if m.is_invertible() {
        Ok(())
    } else {
        Err(ThetaError::Equivariance(format!("{what} is not invertible")))
    }
}

impl RightElement {
    /// The identity element.
    pub fn identity(t: &ThetaSpace) -> RightElement {
        RightElement::scalars(t, &t.field.one(), &t.field.one())
    }

    /// `r` and `b` acting by the scalars `cr` and `cb`, with `α0 = 0`.
    pub fn scalars(t: &ThetaSpace, cr: &Scalar, cb: &Scalar) -> RightElement {
        let (f, d) = (t.field, t.dims);
        RightElement {
            r_n1: scalar_id(f, d.n1, cr),
            r_m1: scalar_id(f, d.m1, cr),
            r_a0: scalar_id(f, d.a0, cr),
            alpha0: Matrix::zeros(f, d.a0, 1),
            b_n2: scalar_id(f, d.n2, cb),
            b_m2: scalar_id(f, d.m2, cb),
            b_a0: scalar_id(f, d.a0, cb),
        }
    }

    /// The unipotent element `(1, α0, 1)`.
    pub fn unipotent(t: &ThetaSpace, alpha0: Matrix) -> RightElement {
        RightElement {
            alpha0,
            ..RightElement::identity(t)
        }
    }

    /// The `R` part only: `(r, 0, 1)`.
    pub fn r_part(&self, t: &ThetaSpace) -> RightElement {
        let id = RightElement::identity(t);
        RightElement {
            r_n1: self.r_n1.clone(),
            r_m1: self.r_m1.clone(),
            r_a0: self.r_a0.clone(),
            ..id
        }
    }

    /// The `B` part only: `(1, 0, b)`.
    pub fn b_part(&self, t: &ThetaSpace) -> RightElement {
        let id = RightElement::identity(t);
        RightElement {
            b_n2: self.b_n2.clone(),
            b_m2: self.b_m2.clone(),
            b_a0: self.b_a0.clone(),
            ..id
        }
    }

    /// Whether `r` acts trivially and `α0 = 0`.
    pub fn is_pure_b(&self, t: &ThetaSpace) -> bool {
        let id = RightElement::identity(t);
        self.r_n1 == id.r_n1 && self.r_m1 == id.r_m1 && self.r_a0 == id.r_a0 && self.alpha0.is_zero()
    }

    /// Checks invertibility and the compatibility axioms with the structure maps.
    pub fn validate(&self, t: &ThetaSpace) -> Result<()> {
        let (f, d) = (t.field, t.dims);
        require_shape(&self.r_n1, d.n1, d.n1, "r on N1")?;
        require_shape(&self.r_m1, d.m1, d.m1, "r on M1")?;
        require_shape(&self.r_a0, d.a0, d.a0, "r on A0")?;
        require_shape(&self.alpha0, d.a0, 1, "alpha0")?;
        require_shape(&self.b_n2, d.n2, d.n2, "b on N2")?;
        require_shape(&self.b_m2, d.m2, d.m2, "b on M2")?;
        require_shape(&self.b_a0, d.a0, d.a0, "b on A0")?;
        for (m, w) in [
            (&self.r_n1, "r on N1"),
            (&self.r_m1, "r on M1"),
            (&self.r_a0, "r on A0"),
            (&self.b_n2, "b on N2"),
            (&self.b_m2, "b on M2"),
            (&self.b_a0, "b on A0"),
        ] {
            require_invertible(m, w)?;
        }
        let i_a0 = Matrix::identity(f, d.a0);
        let i_b0 = Matrix::identity(f, d.b0);
        let i_n2 = Matrix::identity(f, d.n2);
        let i_m2 = Matrix::identity(f, d.m2);
        require(
            &t.nu * &i_n2.kron(&self.r_a0) == &self.r_n1 * &t.nu,
            "nu(x ⊗ α·r) = nu(x ⊗ α)·r",
        )?;
        require(
            &t.mu * &i_m2.kron(&self.r_a0) == &self.r_m1 * &t.mu,
            "mu(y ⊗ α·r) = mu(y ⊗ α)·r",
        )?;
        require(
            &t.rho1 * &i_b0.kron(&self.r_n1) == &self.r_m1 * &t.rho1,
            "rho1(β ⊗ x·r) = rho1(β ⊗ x)·r",
        )?;
        require(
            &t.nu * &self.b_n2.kron(&i_a0) == &t.nu * &i_n2.kron(&self.b_a0),
            "nu(x·b ⊗ α) = nu(x ⊗ b·α)",
        )?;
        require(
            &t.mu * &self.b_m2.kron(&i_a0) == &t.mu * &i_m2.kron(&self.b_a0),
            "mu(y·b ⊗ α) = mu(y ⊗ b·α)",
        )?;
        require(
            &t.rho2 * &i_b0.kron(&self.b_n2) == &self.b_m2 * &t.rho2,
            "rho2(β ⊗ x·b) = rho2(β ⊗ x)·b",
        )?;
        require(
            &self.r_a0 * &self.b_a0 == &self.b_a0 * &self.r_a0,
            "actions of r and b on A0 commute",
        )?;
        Ok(())
    }

    /// Group law: `(g1, α0, g2)(g1', α0', g2') = (g1 g1', α0 g1' + g2 α0', g2 g2')`.
    pub fn compose(&self, o: &RightElement) -> RightElement {
        RightElement {
            r_n1: &o.r_n1 * &self.r_n1,
            r_m1: &o.r_m1 * &self.r_m1,
            r_a0: &o.r_a0 * &self.r_a0,
            alpha0: &(&o.r_a0 * &self.alpha0) + &(&self.b_a0 * &o.alpha0),
            b_n2: &o.b_n2 * &self.b_n2,
            b_m2: &o.b_m2 * &self.b_m2,
            b_a0: &self.b_a0 * &o.b_a0,
        }
    }

    /// Inverse in `G_R`.
    pub fn inverse(&self) -> Result<RightElement> {
        let r_a0_inv = self.r_a0.inverse()?;
        let b_a0_inv = self.b_a0.inverse()?;
        Ok(RightElement {
            r_n1: self.r_n1.inverse()?,
            r_m1: self.r_m1.inverse()?,
            alpha0: -&(&b_a0_inv * &(&r_a0_inv * &self.alpha0)),
            r_a0: r_a0_inv,
            b_n2: self.b_n2.inverse()?,
            b_m2: self.b_m2.inverse()?,
            b_a0: b_a0_inv,
        })
    }
}

impl LeftElement {
    /// The identity element.
    pub fn identity(t: &ThetaSpace) -> LeftElement {
        LeftElement::scalars(t, &t.field.one(), &t.field.one())
    }

    /// `g_M` and `ℓ` acting by scalars, with `β = 0`.
    pub fn scalars(t: &ThetaSpace, cm: &Scalar, cl: &Scalar) -> LeftElement {
        let (f, d) = (t.field, t.dims);
        LeftElement {
            g_m: scalar_id(f, d.m, cm),
            beta: Matrix::zeros(f, d.b0, d.m),
            l_m1: scalar_id(f, d.m1, cl),
            l_m2: scalar_id(f, d.m2, cl),
            l_b0: scalar_id(f, d.b0, cl),
        }
    }

    /// The element `(g_M, 0, 1)`.
    pub fn gl_m(t: &ThetaSpace, g_m: Matrix) -> LeftElement {
        LeftElement {
            g_m,
            ..LeftElement::identity(t)
        }
    }

    /// The unipotent element `(1, β, 1)`.
    pub fn unipotent(t: &ThetaSpace, beta: Matrix) -> LeftElement {
        LeftElement {
            beta,
            ..LeftElement::identity(t)
        }
    }

    /// The `L` part only: `(1, 0, ℓ)`.
    pub fn l_part(&self, t: &ThetaSpace) -> LeftElement {
        LeftElement {
            l_m1: self.l_m1.clone(),
            l_m2: self.l_m2.clone(),
            l_b0: self.l_b0.clone(),
            ..LeftElement::identity(t)
        }
    }

    /// Checks invertibility and the compatibility axioms with the structure maps.
    pub fn validate(&self, t: &ThetaSpace) -> Result<()> {
        let (f, d) = (t.field, t.dims);
        require_shape(&self.g_m, d.m, d.m, "g_M")?;
        require_shape(&self.beta, d.b0, d.m, "beta")?;
        require_shape(&self.l_m1, d.m1, d.m1, "l on M1")?;
        require_shape(&self.l_m2, d.m2, d.m2, "l on M2")?;
        require_shape(&self.l_b0, d.b0, d.b0, "l on B0")?;
        for (m, w) in [
            (&self.g_m, "g_M"),
            (&self.l_m1, "l on M1"),
            (&self.l_m2, "l on M2"),
            (&self.l_b0, "l on B0"),
        ] {
            require_invertible(m, w)?;
        }
        let i_n1 = Matrix::identity(f, d.n1);
        let i_n2 = Matrix::identity(f, d.n2);
        let i_a0 = Matrix::identity(f, d.a0);
        require(
            &t.rho1 * &self.l_b0.kron(&i_n1) == &self.l_m1 * &t.rho1,
            "rho1(ℓ·β ⊗ x) = ℓ·rho1(β ⊗ x)",
        )?;
        require(
            &t.rho2 * &self.l_b0.kron(&i_n2) == &self.l_m2 * &t.rho2,
            "rho2(ℓ·β ⊗ x) = ℓ·rho2(β ⊗ x)",
        )?;
        require(
            &t.mu * &self.l_m2.kron(&i_a0) == &self.l_m1 * &t.mu,
            "mu(ℓ·y ⊗ α) = ℓ·mu(y ⊗ α)",
        )?;
        Ok(())
    }

    /// Group law: `(g, β, ℓ)(g', β', ℓ') = (g g', β g' + ℓ β', ℓ ℓ')`.
    pub fn compose(&self, o: &LeftElement) -> LeftElement {
        LeftElement {
            g_m: &self.g_m * &o.g_m,
            beta: &(&self.beta * &o.g_m) + &(&self.l_b0 * &o.beta),
            l_m1: &self.l_m1 * &o.l_m1,
            l_m2: &self.l_m2 * &o.l_m2,
            l_b0: &self.l_b0 * &o.l_b0,
        }
    }

    /// Inverse in `G_L`.
    pub fn inverse(&self) -> Result<LeftElement> {
        let g_inv = self.g_m.inverse()?;
        let l_b0_inv = self.l_b0.inverse()?;
        Ok(LeftElement {
            beta: -&(&(&l_b0_inv * &self.beta) * &g_inv),
            g_m: g_inv,
            l_m1: self.l_m1.inverse()?,
            l_m2: self.l_m2.inverse()?,
            l_b0: l_b0_inv,
        })
    }
}

/// Right action `w ↦ w·g`.
pub fn act_right(t: &ThetaSpace, w: &MorphismPoint, g: &RightElement) -> MorphismPoint {
    let nu_bar = t.nu_bar(&g.alpha0);
    MorphismPoint {
        psi1: &(&g.r_n1 * &w.psi1) + &(&nu_bar * &w.psi2),
        psi2: &g.b_n2 * &w.psi2,
        phi1: &(&g.r_m1 * &w.phi1) + &(&t.mu * &w.phi2.kron(&g.alpha0)),
        phi2: &g.b_m2 * &w.phi2,
    }
}

/// Left action `w ↦ g·w`.
pub fn act_left(t: &ThetaSpace, w: &MorphismPoint, g: &LeftElement) -> MorphismPoint {
    let gt = g.g_m.transpose();
    let pair1 = (&g.beta * &w.psi1.transpose()).vectorize();
    let pair2 = (&g.beta * &w.psi2.transpose()).vectorize();
    MorphismPoint {
        psi1: &w.psi1 * &gt,
        psi2: &w.psi2 * &gt,
        phi1: &(&g.l_m1 * &w.phi1) + &(&t.rho1 * &pair1),
        phi2: &(&g.l_m2 * &w.phi2) + &(&t.rho2 * &pair2),
    }
}

/// Applies a one-sided group element.
pub fn act(t: &ThetaSpace, g: &GroupElement, w: &MorphismPoint) -> MorphismPoint {
    match g {
        GroupElement::Left(l) => act_left(t, w, l),
        GroupElement::Right(r) => act_right(t, w, r),
    }
}

impl PairElement {
    /// The identity of `G`.
    pub fn identity(t: &ThetaSpace) -> PairElement {
        PairElement {
            right: RightElement::identity(t),
            left: LeftElement::identity(t),
        }
    }

    /// Acts by `w ↦ g_L (w g_R)`.
    pub fn act(&self, t: &ThetaSpace, w: &MorphismPoint) -> MorphismPoint {
        act_left(t, &act_right(t, w, &self.right), &self.left)
    }

    /// Validates both components.
    pub fn validate(&self, t: &ThetaSpace) -> Result<()> {
        self.right.validate(t)?;
        self.left.validate(t)?;
        require(
            &self.left.l_m1 * &self.right.r_m1 == &self.right.r_m1 * &self.left.l_m1,
            "actions of ℓ and r on M1 commute",
        )?;
        require(
            &self.left.l_m2 * &self.right.b_m2 == &self.right.b_m2 * &self.left.l_m2,
            "actions of ℓ and b on M2 commute",
        )
    }

    /// Composition: `(g h)·w = g·(h·w)`.
    pub fn compose(&self, o: &PairElement) -> PairElement {
        PairElement {
            right: o.right.compose(&self.right),
            left: self.left.compose(&o.left),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_point_w0, random_theta, ThetaShape};
    use rand::SeedableRng;

    #[test]
    fn identity_and_sign_involution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let t = random_theta(Field::Rationals, &ThetaShape::default(), &mut rng);
        let w = random_point_w0(&t, &mut rng);
        assert_eq!(act_right(&t, &w, &RightElement::identity(&t)), w);
        assert_eq!(act_left(&t, &w, &LeftElement::identity(&t)), w);
        let minus = t.field.from_i64(-1);
        let g = RightElement::scalars(&t, &minus, &t.field.one());
        g.validate(&t).unwrap();
        let once = act_right(&t, &w, &g);
        assert_ne!(once, w);
        assert_eq!(act_right(&t, &once, &g), w);
    }
}
