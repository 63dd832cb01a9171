//! Kronecker modules `f: L ⊗ M → N` and their mutation.

use exactfield::{all_vectors, total_subspace_count, Field, Matrix, Subspace};

use crate::error::{Result, StabilityError};
use crate::verdict::{StabilityVerdict, Witness};

/// A linear map `L ⊗ M → N`, stored as an `n x (q·m)` matrix with column index `(l, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KroneckerModule {
    /// `dim L`.
    pub q: usize,
    /// `dim M`.
    pub m: usize,
    /// `dim N`.
    pub n: usize,
    /// The map.
    pub f: Matrix,
}

impl KroneckerModule {
    /// Builds a module, checking the shape.
    pub fn new(q: usize, m: usize, n: usize, f: Matrix) -> Result<KroneckerModule> {
        if f.shape() != (n, q * m) {
            return Err(StabilityError::Dimension(format!("map is {}x{}, expected {n}x{}", f.rows(), f.cols(), q * m)));
        }
        Ok(KroneckerModule { q, m, n, f })
    }

    /// The base field.
    pub fn field(&self) -> Field {
        self.f.field()
    }

    /// `f(L ⊗ M')` for `M'` spanned by the columns of `basis`.
    pub fn image_of(&self, basis: &Matrix) -> Subspace {
        Subspace::span(&(&self.f * &Matrix::identity(self.field(), self.q).kron(basis)))
    }

    /// The action `f ↦ g_N ∘ f ∘ (I_L ⊗ g_M⁻¹)`.
    pub fn act(&self, g_m: &Matrix, g_n: &Matrix) -> Result<KroneckerModule> {
        let inv = g_m.inverse()?;
        Ok(KroneckerModule { f: &(g_n * &self.f) * &Matrix::identity(self.field(), self.q).kron(&inv), ..self.clone() })
    }
}

fn check_finite(field: Field) -> Result<u32> {
    field.order().ok_or_else(|| StabilityError::NotFinite(field.to_string()))
}

/// Every subspace of `field^n`, ordered by dimension then canonical order.
pub fn all_subspaces(field: Field, n: usize, budget: u128) -> Result<Vec<Subspace>> {
    let q = check_finite(field)?;
    let needed = total_subspace_count(q, n);
    if needed > budget {
        return Err(StabilityError::Budget { what: "subspaces".into(), needed, budget });
    }
    let mut out = vec![];
    for d in 0..=n {
        out.extend(exactfield::enumerate_subspaces(field, n, d, budget)?);
    }
    Ok(out)
}

/// Decides (semi)stability: for `M' ≠ 0` and `N' ≠ N` with `f(L ⊗ M') ⊂ N'`,
/// `dim N' / dim M' ≥ dim N / dim M` (strictly for stability).
pub fn kronecker_semistable(k: &KroneckerModule, strict: bool, budget: u128) -> Result<StabilityVerdict> {
    let field = k.field();
    let mut semistable = true;
    let mut stable = true;
    let mut witness = None;
    for sub in all_subspaces(field, k.m, budget)? {
        if sub.dim() == 0 {
            continue;
        }
        let image = k.image_of(sub.basis());
        if image.dim() == k.n {
            continue;
        }
        let lhs = image.dim() * k.m;
        let rhs = k.n * sub.dim();
        let breaks_ss = lhs < rhs;
        let breaks_s = lhs <= rhs;
        if breaks_ss {
            semistable = false;
        }
        if breaks_s {
            stable = false;
        }
        if witness.is_none() && ((strict && breaks_s) || (!strict && breaks_ss)) {
            witness = Some(Witness { sources: vec![sub.clone()], targets: vec![image], orbit_index: 0 });
        }
    }
    Ok(StabilityVerdict { semistable, stable, witness })
}

/// The mutation `A(f): L* ⊗ M* → ker(f)*`, a module of dimensions `(q, m, q·m − n)`.
///
/// With `K` the echelon kernel basis of `f`, the matrix of `A(f)` is `Kᵀ`.
pub fn kronecker_mutate(k: &KroneckerModule) -> Result<KroneckerModule> {
    let m2 = (k.q * k.m) as i64 - k.n as i64;
    if m2 <= 0 {
        return Err(StabilityError::NonPositiveDimension(m2));
    }
    if k.f.rank() != k.n {
        return Err(StabilityError::NotSurjective);
    }
    let kernel = k.f.kernel();
    KroneckerModule::new(k.q, k.m, m2 as usize, kernel.transpose())
}

/// Every invertible `n x n` matrix over a prime field.
pub fn general_linear_group(field: Field, n: usize, budget: u128) -> Result<Vec<Matrix>> {
    let q = check_finite(field)? as u128;
    let needed = q.checked_pow((n * n) as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(StabilityError::Budget { what: "matrices".into(), needed, budget });
    }
    Ok(all_vectors(field, n * n, budget)?.into_iter().map(|v| v.reshape(n, n)).filter(Matrix::is_invertible).collect())
}

/// Whether `other` lies in the `GL(M) x GL(N)` orbit of `k`.
pub fn in_orbit(k: &KroneckerModule, other: &KroneckerModule, budget: u128) -> Result<bool> {
    if (k.q, k.m, k.n) != (other.q, other.m, other.n) {
        return Ok(false);
    }
    let gm = general_linear_group(k.field(), k.m, budget)?;
    let gn = general_linear_group(k.field(), k.n, budget)?;
    for a in &gm {
        let moved = &k.f * &Matrix::identity(k.field(), k.q).kron(&a.inverse()?);
        for b in &gn {
            if &(b * &moved) == &other.f {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Field = Field::Prime(2);

    #[test]
    fn zero_map_is_unstable() {
        let k = KroneckerModule::new(2, 1, 1, Matrix::zeros(F2, 1, 2)).unwrap();
        let v = kronecker_semistable(&k, false, 1000).unwrap();
        assert!(!v.semistable);
        assert_eq!(v.witness.unwrap().targets[0].dim(), 0);
    }

    #[test]
    fn nonzero_map_is_stable() {
        let k = KroneckerModule::new(2, 1, 1, Matrix::from_i64_rows(F2, &[vec![1, 0]])).unwrap();
        let v = kronecker_semistable(&k, true, 1000).unwrap();
        assert!(v.stable && v.semistable && v.witness.is_none());
    }

    #[test]
    fn witness_is_the_image() {
        let f = Matrix::from_i64_rows(F2, &[vec![1, 0, 0, 0], vec![0, 0, 0, 0]]);
        let k = KroneckerModule::new(2, 2, 2, f).unwrap();
        let v = kronecker_semistable(&k, false, 1000).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.targets[0], k.image_of(w.sources[0].basis()));
        assert!(w.targets[0].dim() * 2 < 2 * w.sources[0].dim());
    }

    #[test]
    fn mutation_example() {
        let k = KroneckerModule::new(2, 1, 1, Matrix::from_i64_rows(F2, &[vec![1, 0]])).unwrap();
        let a = kronecker_mutate(&k).unwrap();
        assert_eq!(a.f, Matrix::from_i64_rows(F2, &[vec![0, 1]]));
        let k3 = KroneckerModule::new(3, 1, 1, Matrix::from_i64_rows(F2, &[vec![1, 1, 0]])).unwrap();
        let a3 = kronecker_mutate(&k3).unwrap();
        assert_eq!((a3.q, a3.m, a3.n), (3, 1, 2));
    }

    #[test]
    fn mutation_requires_surjectivity() {
        let k = KroneckerModule::new(2, 1, 1, Matrix::zeros(F2, 1, 2)).unwrap();
        assert_eq!(kronecker_mutate(&k), Err(StabilityError::NotSurjective));
        let k = KroneckerModule::new(1, 1, 1, Matrix::from_i64_rows(F2, &[vec![1]])).unwrap();
        assert_eq!(kronecker_mutate(&k), Err(StabilityError::NonPositiveDimension(0)));
    }
}
