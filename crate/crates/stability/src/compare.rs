//! Comparison of the verdict of a point with the verdict of its mutation.

use exactfield::BigRational;
use mutation::{build_dual, mutate_default};
use num_traits::{One, Zero};
use typers::{
    build_theta_p_with_layout, dual_point_to_rs, in_w0_p, map_polarization, mutated_hom_data, rs_to_point, HomData,
    MutatedHomData, Polarization, PolarizationMap, RsMorphism,
};

use crate::error::{Result, StabilityError};
use crate::rs::{is_semistable_rs, GroupMode, SearchOptions};
use crate::verdict::StabilityVerdict;

/// Truth values of the polarization hypotheses.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    /// `Σ_{i<p} λ_i m_i ≤ μ_1`.
    pub forward: bool,
    /// `μ_1 ≥ 1/(n_1 + 1)`.
    pub backward: bool,
    /// `μ_1 (n_1 − 1) < Σ_{j≥p} λ_j m_j`.
    pub open_set: bool,
    /// Every mapped weight is positive.
    pub mapped_positive: bool,
}

/// One implication between verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Implication {
    /// Human-readable statement.
    pub name: String,
    /// Whether the hypotheses guarantee it.
    pub asserted: bool,
    /// Whether it holds for this point.
    pub holds: bool,
}

impl Implication {
    /// Whether the implication is either not asserted or true.
    pub fn passed(&self) -> bool {
        !self.asserted || self.holds
    }
}

/// Verdicts of `w` and of its mutation `z(w)` and the implications between them.
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    /// Splitting index.
    pub p: usize,
    /// Whether `w ∈ W⁰_p`.
    pub in_w0: bool,
    /// `G`-verdict of `w`.
    pub verdict_w: StabilityVerdict,
    /// The mutated morphism, when `w ∈ W⁰_p`.
    pub z: Option<RsMorphism>,
    /// `G(p)`-verdict of `z(w)` relative to the mapped polarization.
    pub verdict_z: Option<StabilityVerdict>,
    /// The mapped polarization.
    pub mapped: PolarizationMap,
    /// Hypothesis values.
    pub hypotheses: Hypotheses,
    /// Implications in a fixed order.
    pub implications: Vec<Implication>,
}

impl ComparisonReport {
    /// Whether every asserted implication holds.
    pub fn passed(&self) -> bool {
        self.implications.iter().all(Implication::passed)
    }

    /// Whether both notions agree on `w` and `z(w)`.
    pub fn verdicts_agree(&self) -> Option<bool> {
        self.verdict_z
            .as_ref()
            .map(|z| z.semistable == self.verdict_w.semistable && z.stable == self.verdict_w.stable)
    }
}

fn q(k: usize) -> BigRational {
    BigRational::from_integer((k as i64).into())
}

/// Evaluates the three polarization hypotheses at splitting index `p`.
pub fn hypotheses(pol: &Polarization, p: usize, mapped: &PolarizationMap) -> Hypotheses {
    let mu1 = &pol.mu[0];
    let n1 = pol.mult.n[0];
    let head = (0..p).fold(BigRational::zero(), |acc, i| acc + &pol.lambda[i] * q(pol.mult.m[i]));
    let tail = (p..pol.lambda.len()).fold(BigRational::zero(), |acc, j| acc + &pol.lambda[j] * q(pol.mult.m[j]));
    let backward = mu1 * q(n1 + 1) >= BigRational::one();
    let open_set = if n1 <= 1 { tail > BigRational::zero() } else { mu1 * q(n1 - 1) < tail };
    Hypotheses { forward: &head <= mu1, backward, open_set, mapped_positive: mapped.is_positive() }
}

/// The mutation of `w` at splitting index `p`, read as a morphism of the mutated type.
pub fn mutate_rs(h: &HomData, pol: &Polarization, p: usize, mh: &MutatedHomData, w: &RsMorphism) -> Result<RsMorphism> {
    let (t, lay) = build_theta_p_with_layout(h, &pol.mult, p)?;
    let dual = build_dual(&t)?;
    let point = rs_to_point(h, &pol.mult, &lay, w)?;
    let z = mutate_default(&dual, &t, &point)?;
    Ok(dual_point_to_rs(h, &pol.mult, &lay, &dual, mh, &z)?)
}

/// Compares the `G`-verdict of `w` with the `G(p)`-verdict of its mutation.
pub fn compare_stability(
    w: &RsMorphism,
    h: &HomData,
    pol: &Polarization,
    p: usize,
    opts: &SearchOptions,
) -> Result<ComparisonReport> {
    let mapped = map_polarization(pol, h, p)?;
    let hyp = hypotheses(pol, p, &mapped);
    let in_w0 = in_w0_p(h, &pol.mult, p, w)?;
    let verdict_w = is_semistable_rs(w, h, pol, GroupMode::Full, false, opts)?;
    let (z, verdict_z) = if in_w0 {
        let mh = mutated_hom_data(h, p)?;
        let z = mutate_rs(h, pol, p, &mh, w)?;
        let v = is_semistable_rs(&z, &mh.data, &mapped.polarization, GroupMode::Full, false, opts)?;
        (Some(z), Some(v))
    } else {
        (None, None)
    };
    let forward = hyp.forward && hyp.mapped_positive && in_w0;
    let backward = hyp.backward && hyp.mapped_positive && in_w0;
    let imp = |name: &str, asserted: bool, holds: bool| Implication { name: name.into(), asserted, holds };
    let mut implications = vec![];
    match &verdict_z {
        Some(vz) => {
            implications.push(imp("z(w) semistable => w semistable", forward, !vz.semistable || verdict_w.semistable));
            implications.push(imp("z(w) stable => w stable", forward, !vz.stable || verdict_w.stable));
            implications.push(imp("w semistable => z(w) semistable", backward, !verdict_w.semistable || vz.semistable));
            implications.push(imp("w stable => z(w) stable", backward, !verdict_w.stable || vz.stable));
        }
        None => {
            implications.push(imp("w outside W0_p => w not semistable", hyp.open_set, !verdict_w.semistable));
        }
    }
    Ok(ComparisonReport { p, in_w0, verdict_w, z, verdict_z, mapped, hypotheses: hyp, implications })
}

/// Fails with [`StabilityError::OutsideW0`] unless `w ∈ W⁰_p`.
pub fn require_w0(h: &HomData, pol: &Polarization, p: usize, w: &RsMorphism) -> Result<()> {
    if in_w0_p(h, &pol.mult, p, w)? {
        Ok(())
    } else {
        Err(StabilityError::OutsideW0)
    }
}
