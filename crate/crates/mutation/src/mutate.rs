//! The mutation `z(w) ∈ W'⁰` of a point `w ∈ W⁰`.
//!
//! A mutation choice consists of `u ∈ B0 ⊗ N2*` with `rho2(u) = -φ2`,
//! `v ∈ N1 ⊗ N2*` with `v ∘ ψ̄2 = ψ1`, and an isomorphism `ε: N → ker ψ̄2`.
//! In coordinates `u` is a `B0 x N2` matrix `U`, `v` is an `N1 x N2` matrix `V`
//! with `V Ψ2 = Ψ1`, and `ε` is an `N2 x N` matrix `K` whose columns span
//! `ker Ψ2ᵀ`. The mutated point is
//!
//! * `ψ'2 = K`
//! * `ψ'1 = U K`
//! * `φ'2 = [V]`, the class of `V` in `M2'`
//! * `φ'1 = φ1 + rho1(U Vᵀ)`

use exactfield::Matrix;
use theta::{in_w0, Chart, MorphismPoint, ThetaSpace};

use crate::dual::DualSpace;
use crate::error::{MutationError, Result};

/// The data `(u, v, ε)` determining one representative of the mutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationChoice {
    /// `B0 x N2` matrix with `rho2(vec U) = -φ2`.
    pub u: Matrix,
    /// `N1 x N2` matrix with `V Ψ2 = Ψ1`.
    pub v: Matrix,
    /// `N2 x N` matrix whose columns form a basis of `ker Ψ2ᵀ`.
    pub kernel: Matrix,
}

impl MutationChoice {
    /// Checks the defining equations against `t` and `w`.
    pub fn check(&self, t: &ThetaSpace, w: &MorphismPoint) -> Result<()> {
        let d = t.dims;
        if self.u.shape() != (d.b0, d.n2) || self.v.shape() != (d.n1, d.n2) || self.kernel.shape() != (d.n2, d.n) {
            return Err(MutationError::BadChoice("shape mismatch".into()));
        }
        if &t.rho2 * &self.u.vectorize() != -&w.phi2 {
            return Err(MutationError::BadChoice("rho2(u) differs from -phi2".into()));
        }
        if &self.v * &w.psi2 != w.psi1 {
            return Err(MutationError::BadChoice("v ∘ psi2_bar differs from psi1".into()));
        }
        if !(&w.psi2_bar() * &self.kernel).is_zero() || self.kernel.rank() != d.n {
            return Err(MutationError::BadChoice("kernel columns are not a basis of ker psi2_bar".into()));
        }
        Ok(())
    }
}

fn require_w0(w: &MorphismPoint) -> Result<()> {
    if in_w0(w) {
        Ok(())
    } else {
        Err(MutationError::NotInW0(w.w0_deficit()))
    }
}

/// The choice obtained from echelon-form solutions and the echelon kernel basis.
pub fn default_choice(t: &ThetaSpace, w: &MorphismPoint) -> Result<MutationChoice> {
    require_w0(w)?;
    let d = t.dims;
    let u = t.rho2.solve(&-&w.phi2)?.reshape(d.b0, d.n2);
    let v = w.psi2.transpose().solve(&w.psi1.transpose())?.transpose();
    let kernel = w.psi2_bar().kernel();
    Ok(MutationChoice { u, v, kernel })
}

/// Evaluates the mutation of `w` for a given choice.
pub fn mutate(dual: &DualSpace, t: &ThetaSpace, w: &MorphismPoint, c: &MutationChoice) -> Result<MorphismPoint> {
    require_w0(w)?;
    c.check(t, w)?;
    let phi1 = &w.phi1 + &(&t.rho1 * &(&c.u * &c.v.transpose()).vectorize());
    let z = MorphismPoint {
        psi1: &c.u * &c.kernel,
        psi2: c.kernel.clone(),
        phi1,
        phi2: &dual.projection * &c.v.vectorize(),
    };
    z.check(&dual.theta)?;
    Ok(z)
}

/// Mutation with the default choice.
pub fn mutate_default(dual: &DualSpace, t: &ThetaSpace, w: &MorphismPoint) -> Result<MorphismPoint> {
    mutate(dual, t, w, &default_choice(t, w)?)
}

/// The splitting data a chart determines at a point of its domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartSplitting {
    /// `N2 x M` matrix of `r_M0: M → N2*`, the inverse of `ψ̄2` restricted to `M0`.
    pub r: Matrix,
    /// `N2 x N2` matrix of `s = I - r ∘ ψ̄2`, the projection onto `ker ψ̄2` along `M0`.
    pub s: Matrix,
    /// `N x N2` matrix of `q ∘ s`, with `K (q ∘ s) = s`.
    pub q_s: Matrix,
    /// The mutation choice produced by the chart.
    pub choice: MutationChoice,
}

/// Evaluates a chart at `w`.
pub fn chart_splitting(t: &ThetaSpace, ch: &Chart, w: &MorphismPoint) -> Result<ChartSplitting> {
    require_w0(w)?;
    ch.validate(t)?;
    if !ch.contains(w) {
        return Err(MutationError::OutsideChart);
    }
    let (f, d) = (t.field, t.dims);
    let bar = w.psi2_bar();
    let r = &ch.m0 * &(&bar * &ch.m0).inverse()?;
    let s = &Matrix::identity(f, d.n2) - &(&r * &bar);
    let kernel = &(&s * &ch.n0) * &ch.eps0;
    let along_n0 = ch.m0.hstack(&ch.n0).inverse()?.block(d.m, 0, d.n, d.n2);
    let q_s = &(&ch.eps0.inverse()? * &along_n0) * &s;
    let u = -&(&ch.r2 * &w.phi2).reshape(d.b0, d.n2);
    let v = &w.psi1 * &r.transpose();
    Ok(ChartSplitting {
        r,
        s,
        q_s,
        choice: MutationChoice { u, v, kernel },
    })
}

/// The chart mutation `λ_{M0,N0,ε0,r2}(w)`.
pub fn mutate_chart(dual: &DualSpace, t: &ThetaSpace, ch: &Chart, w: &MorphismPoint) -> Result<MorphismPoint> {
    let sp = chart_splitting(t, ch, w)?;
    mutate(dual, t, w, &sp.choice)
}

/// Checks `r ∘ ψ̄2 + s = I`, `ψ̄2 ∘ r = I`, `ψ̄2 ∘ s = 0` and `K (q ∘ s) = s`.
pub fn splitting_identities(t: &ThetaSpace, w: &MorphismPoint, sp: &ChartSplitting) -> bool {
    let (f, d) = (t.field, t.dims);
    let bar = w.psi2_bar();
    &(&sp.r * &bar) + &sp.s == Matrix::identity(f, d.n2)
        && &bar * &sp.r == Matrix::identity(f, d.m)
        && (&bar * &sp.s).is_zero()
        && &sp.choice.kernel * &sp.q_s == sp.s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::build_dual;
    use exactfield::Field;
    use rand::SeedableRng;
    use theta::random::{random_chart_for, random_point_w0, theta_with_dims};
    use theta::Dims;

    #[test]
    fn mutation_lands_in_dual_w0() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let t = theta_with_dims(Field::Rationals, Dims::from_array([2, 3, 2, 2, 1, 1, 1, 2]), 2, &mut rng);
        let dual = build_dual(&t).unwrap();
        for _ in 0..5 {
            let w = random_point_w0(&t, &mut rng);
            let z = mutate_default(&dual, &t, &w).unwrap();
            assert!(in_w0(&z));
        }
    }

    #[test]
    fn chart_identities_hold() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        let t = theta_with_dims(Field::Prime(7), Dims::from_array([2, 4, 2, 2, 1, 1, 2, 2]), 3, &mut rng);
        for _ in 0..5 {
            let w = random_point_w0(&t, &mut rng);
            let ch = random_chart_for(&t, &w, &mut rng);
            let sp = chart_splitting(&t, &ch, &w).unwrap();
            assert!(splitting_identities(&t, &w, &sp));
            sp.choice.check(&t, &w).unwrap();
        }
    }

    #[test]
    fn outside_w0_is_rejected() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let t = theta_with_dims(Field::Rationals, Dims::from_array([1, 3, 1, 1, 1, 1, 1, 2]), 2, &mut rng);
        let dual = build_dual(&t).unwrap();
        let w = MorphismPoint::zero(&t);
        assert!(matches!(mutate_default(&dual, &t, &w), Err(MutationError::NotInW0(1))));
    }
}
