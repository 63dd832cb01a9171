//! Polarizations of type-(r,s) actions and their transport to the mutated type.

use exactfield::{format_rational, parse_rational, BigRational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, TypeError};
use crate::hom::HomData;
use crate::morphism::Multiplicities;
use crate::mutated::mutated_multiplicities;

/// Weights `λ_1, …, λ_r` on the sources and `μ_1, …, μ_s` on the targets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polarization {
    /// Source weights.
    pub lambda: Vec<BigRational>,
    /// Target weights.
    pub mu: Vec<BigRational>,
    /// Multiplicities the weights are normalized against.
    pub mult: Multiplicities,
}

fn weighted(w: &[BigRational], d: &[usize]) -> BigRational {
    w.iter().zip(d).fold(BigRational::zero(), |acc, (x, &k)| acc + x * BigRational::from_integer((k as i64).into()))
}

impl Polarization {
    /// Builds a polarization, checking normalization and positivity.
    pub fn new(lambda: Vec<BigRational>, mu: Vec<BigRational>, mult: Multiplicities) -> Result<Polarization> {
        let pol = Polarization { lambda, mu, mult };
        pol.check()?;
        Ok(pol)
    }

    /// `Σ λ_i m_i`.
    pub fn source_total(&self) -> BigRational {
        weighted(&self.lambda, &self.mult.m)
    }

    /// `Σ μ_l n_l`.
    pub fn target_total(&self) -> BigRational {
        weighted(&self.mu, &self.mult.n)
    }

    /// Checks the two normalizations and positivity.
    pub fn check(&self) -> Result<()> {
        if self.lambda.len() != self.mult.m.len() || self.mu.len() != self.mult.n.len() {
            return Err(TypeError::Polarization("weight and multiplicity lists differ in length".into()));
        }
        if !self.source_total().is_one() || !self.target_total().is_one() {
            return Err(TypeError::Polarization(format!(
                "Σλm = {} and Σμn = {} must both equal 1",
                format_rational(&self.source_total()),
                format_rational(&self.target_total())
            )));
        }
        let bad = self.nonpositive();
        if !bad.is_empty() {
            return Err(TypeError::Polarization(format!("non-positive weights: {}", bad.join(", "))));
        }
        Ok(())
    }

    /// Names of the weights that are not positive.
    pub fn nonpositive(&self) -> Vec<String> {
        let mut out = vec![];
        for (i, x) in self.lambda.iter().enumerate() {
            if !x.is_positive() {
                out.push(format!("lambda[{i}] = {}", format_rational(x)));
            }
        }
        for (l, x) in self.mu.iter().enumerate() {
            if !x.is_positive() {
                out.push(format!("mu[{l}] = {}", format_rational(x)));
            }
        }
        out
    }

    /// The polarization of the transposed morphisms: both weight lists reversed and exchanged.
    pub fn transpose(&self) -> Polarization {
        Polarization {
            lambda: self.mu.iter().rev().cloned().collect(),
            mu: self.lambda.iter().rev().cloned().collect(),
            mult: self.mult.transpose(),
        }
    }

    /// `Σ λ_i m'_i − Σ μ_l n'_l` for subspace dimensions `m'`, `n'`.
    pub fn difference(&self, m_sub: &[usize], n_sub: &[usize]) -> BigRational {
        weighted(&self.lambda, m_sub) - weighted(&self.mu, n_sub)
    }

    /// `m_2 λ_2` for type `(2,1)`.
    pub fn t_parameter(&self) -> Option<BigRational> {
        (self.lambda.len() == 2 && self.mu.len() == 1)
            .then(|| &self.lambda[1] * BigRational::from_integer((self.mult.m[1] as i64).into()))
    }

    /// The type-(2,1) polarization with parameter `t = m_2 λ_2`.
    pub fn from_t(t: &BigRational, mult: Multiplicities) -> Result<Polarization> {
        if mult.m.len() != 2 || mult.n.len() != 1 {
            return Err(TypeError::Polarization("t parametrizes type (2,1) only".into()));
        }
        let q = |k: usize| BigRational::from_integer((k as i64).into());
        let lambda = vec![(BigRational::one() - t) / q(mult.m[0]), t / q(mult.m[1])];
        let mu = vec![BigRational::one() / q(mult.n[0])];
        Polarization::new(lambda, mu, mult)
    }

    /// Converts to the JSON form.
    pub fn to_doc(&self) -> PolarizationDoc {
        PolarizationDoc {
            lambda: self.lambda.iter().map(format_rational).collect(),
            mu: self.mu.iter().map(format_rational).collect(),
            m: self.mult.m.clone(),
            n: self.mult.n.clone(),
        }
    }

    /// Parses and checks the JSON form.
    pub fn from_doc(doc: &PolarizationDoc) -> Result<Polarization> {
        let parse = |v: &[String]| -> Result<Vec<BigRational>> {
            v.iter().map(|s| parse_rational(s).map_err(|e| TypeError::Document(e.to_string()))).collect()
        };
        Polarization::new(parse(&doc.lambda)?, parse(&doc.mu)?, Multiplicities::new(&doc.m, &doc.n))
    }
}

/// JSON form of a [`Polarization`], with weights as `num/den` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizationDoc {
    /// Source weights.
    pub lambda: Vec<String>,
    /// Target weights.
    pub mu: Vec<String>,
    /// Source multiplicities.
    pub m: Vec<usize>,
    /// Target multiplicities.
    pub n: Vec<usize>,
}

/// Result of transporting a polarization to the mutated type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    /// Unnormalized weights `α'`.
    pub alpha_raw: Vec<BigRational>,
    /// Unnormalized weights `β'`.
    pub beta_raw: Vec<BigRational>,
    /// The normalization constant.
    pub c: BigRational,
    /// The normalized weights over the mutated multiplicities.
    pub polarization: Polarization,
    /// Weights that fail to be positive.
    pub violations: Vec<String>,
}

impl PolarizationMap {
    /// Whether every transported weight is positive.
    pub fn is_positive(&self) -> bool {
        self.violations.is_empty()
    }

    /// The transported polarization, or an error naming the non-positive weights.
    pub fn into_polarization(self) -> Result<Polarization> {
        if self.violations.is_empty() {
            Ok(self.polarization)
        } else {
            Err(TypeError::Polarization(format!("non-positive transported weights: {}", self.violations.join(", "))))
        }
    }
}

/// Transports `pol` to the mutated type at splitting index `p`.
pub fn map_polarization(pol: &Polarization, h: &HomData, p: usize) -> Result<PolarizationMap> {
    let (r, s) = (h.r, h.s);
    if p >= r {
        return Err(TypeError::Dimension(format!("p = {p} must be below r = {r}")));
    }
    if pol.lambda.len() != r || pol.mu.len() != s {
        return Err(TypeError::Polarization("weights do not match the type".into()));
    }
    if !pol.source_total().is_one() || !pol.target_total().is_one() {
        return Err(TypeError::Polarization("input weights are not normalized".into()));
    }
    let mm = mutated_multiplicities(h, &pol.mult, p)?;
    let q = |k: usize| BigRational::from_integer((k as i64).into());
    let mu1 = &pol.mu[0];
    let mut alpha_raw: Vec<BigRational> = pol.lambda[..p].to_vec();
    alpha_raw.push(mu1.clone());
    let mut beta_raw: Vec<BigRational> = (p..r).map(|j| mu1 * q(h.h[0][j]) - &pol.lambda[j]).collect();
    beta_raw.extend(pol.mu[1..].iter().cloned());
    let c = weighted(&pol.lambda[..p], &pol.mult.m[..p]) + mu1 * q(mm.m[p]);
    if !c.is_positive() {
        return Err(TypeError::Polarization(format!("normalization constant {} is not positive", format_rational(&c))));
    }
    let polarization = Polarization {
        lambda: alpha_raw.iter().map(|x| x / &c).collect(),
        mu: beta_raw.iter().map(|x| x / &c).collect(),
        mult: mm,
    };
    let violations = polarization.nonpositive();
    Ok(PolarizationMap { alpha_raw, beta_raw, c, polarization, violations })
}

/// Dimensions `(𝐦, 𝐧)` of the subspaces attached to `(m', n')` on the mutated side.
pub fn mutated_subspace_dims(h: &HomData, p: usize, m_sub: &[usize], n_sub: &[usize]) -> (Vec<i64>, Vec<i64>) {
    let mut m: Vec<i64> = m_sub[..p].iter().map(|&x| x as i64).collect();
    let total: i64 = (p..h.r).map(|j| (h.h[0][j] * m_sub[j]) as i64).sum();
    m.push(total - n_sub[0] as i64);
    let mut n: Vec<i64> = m_sub[p..].iter().map(|&x| x as i64).collect();
    n.extend(n_sub[1..].iter().map(|&x| x as i64));
    (m, n)
}

/// `Σ α_i 𝐦_i − Σ β_l 𝐧_l` with integer (possibly negative) dimensions.
pub fn signed_difference(pol: &Polarization, m: &[i64], n: &[i64]) -> BigRational {
    let z = |k: i64| BigRational::from_integer(k.into());
    let a = pol.lambda.iter().zip(m).fold(BigRational::zero(), |acc, (x, &k)| acc + x * z(k));
    let b = pol.mu.iter().zip(n).fold(BigRational::zero(), |acc, (x, &k)| acc + x * z(k));
    a - b
}
