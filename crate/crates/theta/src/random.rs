//! Seeded random instances of every object in this crate.

use exactfield::{quotient_data, Field, Matrix, Scalar, Subspace};
use rand::Rng;

use crate::chart::Chart;
use crate::group::{LeftElement, RightElement};
use crate::point::MorphismPoint;
use crate::space::{Dims, ThetaSpace};

/// Bounds for random space generation.
#[derive(Clone, Debug)]
pub struct ThetaShape {
    /// Upper bound on every dimension.
    pub max_dim: usize,
    /// Entries are drawn uniformly from `-entry_bound..=entry_bound`.
    pub entry_bound: i64,
}

impl Default for ThetaShape {
    fn default() -> Self {
        ThetaShape {
            max_dim: 4,
            entry_bound: 2,
        }
    }
}

/// A matrix with entries drawn uniformly from `-bound..=bound`.
pub fn random_matrix(field: Field, rows: usize, cols: usize, bound: i64, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| field.from_i64(rng.gen_range(-bound..=bound)))
}

/// A random matrix of full rank `min(rows, cols)`.
pub fn random_full_rank(field: Field, rows: usize, cols: usize, bound: i64, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_matrix(field, rows, cols, bound, rng);
        if m.rank() == rows.min(cols) {
            return m;
        }
    }
}

/// A random nonzero scalar.
pub fn random_unit(field: Field, bound: i64, rng: &mut impl Rng) -> Scalar {
    loop {
        let s = field.from_i64(rng.gen_range(-bound..=bound));
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random space satisfying all four defining conditions.
///
/// `nu` is drawn with `nu_bar` injective and `rho2` surjective; `rho1` is then a
/// random map vanishing on `(I ⊗ nu)(ker rho2 ⊗ A0)` and `mu` is the unique map
/// making diagram (D) commute.
pub fn random_theta(field: Field, shape: &ThetaShape, rng: &mut impl Rng) -> ThetaSpace {
    let mx = shape.max_dim.max(2);
    let bound = shape.entry_bound;
    let m = rng.gen_range(1..mx);
    let n = rng.gen_range(1..=(mx - m));
    let n2 = m + n;
    let n1 = rng.gen_range(0..=mx);
    let a0 = rng.gen_range(0..=mx.min(n1 * n2));
    let b0 = rng.gen_range(0..=mx);
    let m2 = rng.gen_range(0..=mx.min(b0 * n2));
    let m1 = rng.gen_range(0..=mx);
    let dims = Dims {
        n1,
        n2,
        m1,
        m2,
        a0,
        b0,
        m,
        n,
    };
    theta_with_dims(field, dims, bound, rng)
}

/// A random space with prescribed dimensions (requires `a0 ≤ n1·n2`, `m2 ≤ b0·n2`).
pub fn theta_with_dims(field: Field, dims: Dims, bound: i64, rng: &mut impl Rng) -> ThetaSpace {
    let d = dims;
    let nu = loop {
        let nu = random_matrix(field, d.n1, d.n2 * d.a0, bound, rng);
        let t = ThetaSpace::new(
            field,
            Dims { m1: 0, m2: 0, b0: 0, ..d },
            Matrix::zeros(field, 0, 0),
            Matrix::zeros(field, 0, 0),
            Matrix::zeros(field, 0, 0),
            nu.clone(),
        )
        .expect("shapes");
        if t.nu_bar_matrix().rank() == d.a0 {
            break nu;
        }
    };
    let rho2 = random_full_rank(field, d.m2, d.b0 * d.n2, bound, rng);
    let lift = Matrix::identity(field, d.b0).kron(&nu);
    let ker2 = rho2.kernel();
    let forbidden = Subspace::span(&(&lift * &ker2.kron(&Matrix::identity(field, d.a0))));
    let qd = quotient_data(d.b0 * d.n1, &forbidden).expect("ambient matches");
    let coeff = random_matrix(field, d.m1, qd.projection.rows(), bound, rng);
    let rho1 = &coeff * &qd.projection;
    let sec = rho2
        .kron(&Matrix::identity(field, d.a0))
        .right_inverse()
        .expect("rho2 ⊗ I is surjective");
    let mu = &(&rho1 * &lift) * &sec;
    ThetaSpace::new(field, dims, rho1, rho2, mu, nu).expect("shapes are consistent")
}

/// A random point of `W⁰`.
pub fn random_point_w0(t: &ThetaSpace, rng: &mut impl Rng) -> MorphismPoint {
    let (f, d) = (t.field, t.dims);
    MorphismPoint {
        psi1: random_matrix(f, d.n1, d.m, 2, rng),
        psi2: random_full_rank(f, d.n2, d.m, 2, rng),
        phi1: random_matrix(f, d.m1, 1, 2, rng),
        phi2: random_matrix(f, d.m2, 1, 2, rng),
    }
}

/// A random element `(r, α0, b)` where `r`, `b` act by scalars.
pub fn random_right_element(t: &ThetaSpace, rng: &mut impl Rng) -> RightElement {
    let cr = random_unit(t.field, 3, rng);
    let cb = random_unit(t.field, 3, rng);
    RightElement {
        alpha0: random_matrix(t.field, t.dims.a0, 1, 2, rng),
        ..RightElement::scalars(t, &cr, &cb)
    }
}

/// A random element `(g_M, β, ℓ)` where `ℓ` acts by a scalar.
pub fn random_left_element(t: &ThetaSpace, rng: &mut impl Rng) -> LeftElement {
    let cl = random_unit(t.field, 3, rng);
    LeftElement {
        g_m: random_full_rank(t.field, t.dims.m, t.dims.m, 2, rng),
        beta: random_matrix(t.field, t.dims.b0, t.dims.m, 2, rng),
        ..LeftElement::scalars(t, &t.field.one(), &cl)
    }
}

/// A random chart whose domain contains `w`.
pub fn random_chart_for(t: &ThetaSpace, w: &MorphismPoint, rng: &mut impl Rng) -> Chart {
    let (f, d) = (t.field, t.dims);
    let bar = w.psi2_bar();
    loop {
        let m0 = random_matrix(f, d.n2, d.m, 2, rng);
        let n0 = random_matrix(f, d.n2, d.n, 2, rng);
        if !m0.hstack(&n0).is_invertible() || !(&bar * &m0).is_invertible() {
            continue;
        }
        let eps0 = random_full_rank(f, d.n, d.n, 2, rng);
        let base = t.rho2.right_inverse().expect("rho2 surjective");
        let ker = t.rho2.kernel();
        let r2 = &base + &(&ker * &random_matrix(f, ker.cols(), d.m2, 2, rng));
        return Chart { m0, n0, eps0, r2 };
    }
}
