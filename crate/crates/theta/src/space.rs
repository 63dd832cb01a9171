//! The abstract morphism space and its structure maps.
//!
//! Naming follows the diagram-(D) convention: the spaces are `N1, N2, M1, M2,
//! A0, B0` together with the multiplicity spaces `M` and `N`, and the maps are
//!
//! * `rho1: B0 ⊗ N1 → M1`
//! * `rho2: B0 ⊗ N2 → M2`
//! * `mu:   M2 ⊗ A0 → M1`
//! * `nu:   N2 ⊗ A0 → N1`
//!
//! all stored as matrices on left-factor-major tensor bases.

use exactfield::{Field, Matrix};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ThetaError};

/// The eight dimensions of a space.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dims {
    /// `dim N1`.
    pub n1: usize,
    /// `dim N2`.
    pub n2: usize,
    /// `dim M1`.
    pub m1: usize,
    /// `dim M2`.
    pub m2: usize,
    /// `dim A0`.
    pub a0: usize,
    /// `dim B0`.
    pub b0: usize,
    /// `dim M`.
    pub m: usize,
    /// `dim N`.
    pub n: usize,
}

impl Dims {
    /// Dimensions in the order `(N1, N2, M1, M2, A0, B0, M, N)`.
    pub fn as_array(&self) -> [usize; 8] {
        [self.n1, self.n2, self.m1, self.m2, self.a0, self.b0, self.m, self.n]
    }

    /// Builds dimensions from the order `(N1, N2, M1, M2, A0, B0, M, N)`.
    pub fn from_array(d: [usize; 8]) -> Dims {
        Dims {
            n1: d[0],
            n2: d[1],
            m1: d[2],
            m2: d[3],
            a0: d[4],
            b0: d[5],
            m: d[6],
            n: d[7],
        }
    }
}

/// An abstract morphism space: dimensions plus the four structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSpace {
    /// Base field of every matrix.
    pub field: Field,
    /// The eight dimensions.
    pub dims: Dims,
    /// `M1 x (B0·N1)` matrix of `rho1`.
    pub rho1: Matrix,
    /// `M2 x (B0·N2)` matrix of `rho2`.
    pub rho2: Matrix,
    /// `M1 x (M2·A0)` matrix of `mu`.
    pub mu: Matrix,
    /// `N1 x (N2·A0)` matrix of `nu`.
    pub nu: Matrix,
}

/// One entry of a [`ValidationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Name of the condition.
    pub name: String,
    /// Whether it holds.
    pub passed: bool,
    /// Short human-readable detail.
    pub detail: String,
}

/// Pass/fail list for the defining conditions of a space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// The individual checks in a fixed order.
    pub checks: Vec<Check>,
}

impl ValidationReport {
    /// Whether every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Looks up a check by name.
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Name of the commutation check.
pub const CHECK_DIAGRAM: &str = "diagram D";
/// Name of the surjectivity check on `rho2`.
pub const CHECK_RHO2: &str = "rho2 surjective";
/// Name of the injectivity check on `nu_bar`.
pub const CHECK_NU: &str = "nu_bar injective";
/// Name of the dimension identity check.
pub const CHECK_DIMS: &str = "dimension identity";

impl ThetaSpace {
    /// Builds a space, checking only the matrix shapes.
    pub fn new(field: Field, dims: Dims, rho1: Matrix, rho2: Matrix, mu: Matrix, nu: Matrix) -> Result<ThetaSpace> {
        let d = dims;
        let expect = [
            ("rho1", &rho1, d.m1, d.b0 * d.n1),
            ("rho2", &rho2, d.m2, d.b0 * d.n2),
            ("mu", &mu, d.m1, d.m2 * d.a0),
            ("nu", &nu, d.n1, d.n2 * d.a0),
        ];
        for (name, m, r, c) in expect {
            if m.shape() != (r, c) {
                return Err(ThetaError::Dimension(format!(
                    "{name} is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(ThetaError::Dimension(format!("{name} is over {}", m.field())));
            }
        }
        Ok(ThetaSpace {
            field,
            dims,
            rho1,
            rho2,
            mu,
            nu,
        })
    }

    /// A space where only `N2` and the multiplicity spaces are nonzero:
    /// points are Kronecker-type data `ψ2 ∈ N2 ⊗ M`.
    pub fn kronecker_degenerate(field: Field, n2: usize, m: usize) -> ThetaSpace {
        let dims = Dims {
            n1: 0,
            n2,
            m1: 0,
            m2: 0,
            a0: 0,
            b0: 0,
            m,
            n: n2.saturating_sub(m),
        };
        ThetaSpace::new(
            field,
            dims,
            Matrix::zeros(field, 0, 0),
            Matrix::zeros(field, 0, 0),
            Matrix::zeros(field, 0, 0),
            Matrix::zeros(field, 0, 0),
        )
        .expect("shapes are consistent")
    }

    /// `nu_bar(alpha)` as an `N1 x N2` matrix: entry `(i, a)` is `nu(e_a ⊗ alpha)_i`.
    pub fn nu_bar(&self, alpha: &Matrix) -> Matrix {
        let d = self.dims;
        let mut out = Matrix::zeros(self.field, d.n1, d.n2);
        for i in 0..d.n1 {
            for a in 0..d.n2 {
                let mut s = self.field.zero();
                for al in 0..d.a0 {
                    s += &(self.nu.get(i, a * d.a0 + al) * alpha.get(al, 0));
                }
                out.set(i, a, s);
            }
        }
        out
    }

    /// The map `A0 → N1 ⊗ N2*` as an `(N1·N2) x A0` matrix (row index `(i, a)`).
    pub fn nu_bar_matrix(&self) -> Matrix {
        let d = self.dims;
        Matrix::from_fn(self.field, d.n1 * d.n2, d.a0, |row, al| {
            let (i, a) = (row / d.n2, row % d.n2);
            self.nu.get(i, a * d.a0 + al).clone()
        })
    }

    /// Left side of diagram (D): `rho1 ∘ (I_B0 ⊗ nu)` on `B0 ⊗ N2 ⊗ A0`.
    pub fn diagram_left(&self) -> Matrix {
        &self.rho1 * &Matrix::identity(self.field, self.dims.b0).kron(&self.nu)
    }

    /// Right side of diagram (D): `mu ∘ (rho2 ⊗ I_A0)` on `B0 ⊗ N2 ⊗ A0`.
    pub fn diagram_right(&self) -> Matrix {
        &self.mu * &self.rho2.kron(&Matrix::identity(self.field, self.dims.a0))
    }

    /// Evaluates the four defining conditions.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dims;
        let diagram = self.diagram_left() == self.diagram_right();
        let rank2 = self.rho2.rank();
        let rank_nu = self.nu_bar_matrix().rank();
        let dims_ok = d.m >= 1 && d.m < d.n2 && d.m + d.n == d.n2;
        ValidationReport {
            checks: vec![
                Check {
                    name: CHECK_DIAGRAM.into(),
                    passed: diagram,
                    detail: if diagram {
                        "rho1∘(I⊗nu) = mu∘(rho2⊗I)".into()
                    } else {
                        "rho1∘(I⊗nu) differs from mu∘(rho2⊗I)".into()
                    },
                },
                Check {
                    name: CHECK_RHO2.into(),
                    passed: rank2 == d.m2,
                    detail: format!("rank {rank2} of {}", d.m2),
                },
                Check {
                    name: CHECK_NU.into(),
                    passed: rank_nu == d.a0,
                    detail: format!("rank {rank_nu} of {}", d.a0),
                },
                Check {
                    name: CHECK_DIMS.into(),
                    passed: dims_ok,
                    detail: format!("M={} N={} N2={}", d.m, d.n, d.n2),
                },
            ],
        }
    }
}

/// Runs the four defining checks on a space.
pub fn validate_theta(t: &ThetaSpace) -> ValidationReport {
    t.validate()
}
