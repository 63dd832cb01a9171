//! Sufficient conditions for the existence of good or quasi-good quotients.

use constants::{c_formula, Sigma};
use exactfield::BigRational;
use num_traits::{One, Zero};
use typers::{HomData, Polarization};

use crate::error::{Result, ThresholdError};
use crate::report::{Condition, Relation, ThresholdReport};

fn q(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

fn qu(k: usize) -> BigRational {
    q(k as i64)
}

/// Multiplicities and the parameter `t = m2 λ2` of a type-(2,1) polarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdInput {
    /// Dimension of the ambient projective space, when the data come from `P^n`.
    pub n: Option<usize>,
    /// `m1`.
    pub m1: usize,
    /// `m2`.
    pub m2: usize,
    /// `n1`.
    pub n1: usize,
    /// The parameter `t`.
    pub t: BigRational,
}

impl ThresholdInput {
    /// Builds an input, requiring positive multiplicities and `0 < t < 1`.
    pub fn new(n: Option<usize>, m1: usize, m2: usize, n1: usize, t: BigRational) -> Result<ThresholdInput> {
        if m1 == 0 || m2 == 0 || n1 == 0 {
            return Err(ThresholdError::Input("multiplicities must be positive".into()));
        }
        if t <= BigRational::zero() || t >= BigRational::one() {
            return Err(ThresholdError::Input("t must lie strictly between 0 and 1".into()));
        }
        Ok(ThresholdInput { n, m1, m2, n1, t })
    }

    /// `η1 = m1 / n1`.
    pub fn eta1(&self) -> BigRational {
        qu(self.m1) / qu(self.n1)
    }

    /// `η2 = m2 / n1`.
    pub fn eta2(&self) -> BigRational {
        qu(self.m2) / qu(self.n1)
    }
}

/// Dimensions `a = dim Hom(E1,E2)`, `h1 = dim Hom(E1,F1)`, `h2 = dim Hom(E2,F1)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct HomDims {
    /// `dim Hom(E1, E2)`.
    pub a: usize,
    /// `dim Hom(E1, F1)`.
    pub h1: usize,
    /// `dim Hom(E2, F1)`.
    pub h2: usize,
}

impl HomDims {
    /// `b = a·h2 − h1`.
    pub fn b(&self) -> i64 {
        (self.a * self.h2) as i64 - self.h1 as i64
    }

    /// Reads the dimensions from type-(2,1) data.
    pub fn from_hom_data(h: &HomData) -> Result<HomDims> {
        if h.r != 2 || h.s != 1 {
            return Err(ThresholdError::Input(format!("expected type (2,1), got ({},{})", h.r, h.s)));
        }
        Ok(HomDims { a: h.a[1][0], h1: h.h[0][0], h2: h.h[0][1] })
    }

    /// The dimensions for `O(-2), O(-1) → O` on `P^n`.
    pub fn projective(n: usize) -> HomDims {
        HomDims { a: n + 1, h1: (n + 1) * (n + 2) / 2, h2: n + 1 }
    }
}

/// Which family of conditions is evaluated.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// Conditions on the morphisms themselves.
    One,
    /// Conditions obtained through the mutation at `p = 0`.
    Two,
}

/// The two conditions `t > a m2/(a m2 + m1)` and `t > a·c·m2/n1`.
pub fn thm53_ok(d: &HomDims, m1: usize, m2: usize, n1: usize, t: &BigRational, c_ref: &BigRational) -> ThresholdReport {
    let a = qu(d.a);
    let first = &a * qu(m2) / (&a * qu(m2) + qu(m1));
    let second = &a * c_ref * qu(m2) / qu(n1);
    ThresholdReport {
        conditions: vec![
            Condition::new("t > a·m2/(a·m2+m1)", t.clone(), Relation::Greater, Some(first)),
            Condition::new("t > a·c(tau,m2)·m2/n1", t.clone(), Relation::Greater, Some(second)),
        ],
    }
}

/// `max(1/(n1+1), 1 − Σ_{j≥p} λ_j m_j) ≤ μ1 < Σ_{j≥p} λ_j m_j / (n1 − 1)`; the right
/// bound is vacuous when `n1 = 1`.
pub fn thm56_range(pol: &Polarization, p: usize) -> Result<ThresholdReport> {
    if p >= pol.lambda.len() || pol.mu.is_empty() {
        return Err(ThresholdError::Input(format!("p = {p} out of range")));
    }
    let n1 = pol.mult.n[0];
    if n1 == 0 {
        return Err(ThresholdError::Input("n1 must be positive".into()));
    }
    let mu1 = pol.mu[0].clone();
    let tail = (p..pol.lambda.len()).fold(BigRational::zero(), |acc, j| acc + &pol.lambda[j] * qu(pol.mult.m[j]));
    let right = (n1 > 1).then(|| &tail / qu(n1 - 1));
    Ok(ThresholdReport {
        conditions: vec![
            Condition::new("mu1 >= 1/(n1+1)", mu1.clone(), Relation::AtLeast, Some(BigRational::one() / qu(n1 + 1))),
            Condition::new("mu1 >= 1 - sum_{j>=p} lambda_j m_j", mu1.clone(), Relation::AtLeast, Some(BigRational::one() - &tail)),
            Condition::new("mu1 < sum_{j>=p} lambda_j m_j/(n1-1)", mu1, Relation::Less, right),
        ],
    })
}

/// Case 1 repeats [`thm53_ok`] with `c = c_tau`; case 2 uses `c_taustar = c(τ*, m1)`.
pub fn thm59_ok(input: &ThresholdInput, d: &HomDims, c_tau: &BigRational, c_taustar: &BigRational, case: Case) -> ThresholdReport {
    match case {
        Case::One => thm53_ok(d, input.m1, input.m2, input.n1, &input.t, c_tau),
        Case::Two => {
            let t = &input.t;
            let ratio = qu(input.m2) / qu(input.n1);
            let first = &ratio * qu(d.h2);
            let second = &ratio * (q(d.b()) * qu(input.m1) + qu(input.n1)) / (qu(d.a * input.m1) + qu(input.m2));
            let third = BigRational::one() - qu(input.m1) / qu(input.n1) * (qu(d.h1) - qu(d.a) * c_taustar);
            ThresholdReport {
                conditions: vec![
                    Condition::new("t < (m2/n1)·h2", t.clone(), Relation::Less, Some(first)),
                    Condition::new("t > (m2/n1)(b·m1+n1)/(a·m1+m2)", t.clone(), Relation::Greater, Some(second)),
                    Condition::new("t > 1 - (m1/n1)(h1 - a·c(tau*,m1))", t.clone(), Relation::Greater, Some(third)),
                ],
            }
        }
    }
}

/// The conditions for `m1 O(-2) ⊕ m2 O(-1) → n1 O` on `P^n`, written in `η1`, `η2`.
pub fn thm64_ok(input: &ThresholdInput, case: Case) -> Result<ThresholdReport> {
    let n = input.n.ok_or_else(|| ThresholdError::Input("the ambient dimension n is required".into()))?;
    let (e1, e2) = (input.eta1(), input.eta2());
    let t = &input.t;
    let np1 = qu(n + 1);
    let half = BigRational::new(1.into(), 2.into());
    let conditions = match case {
        Case::One => {
            let m2 = input.m2;
            let second = if m2 <= n + 1 {
                Condition::new(
                    "t > (n+1)m2(m2-1)/(2(m2(n+1)-1))·eta2",
                    t.clone(),
                    Relation::Greater,
                    Some(&np1 * qu(m2 * (m2 - 1)) / (q(2) * (qu(m2 * (n + 1)) - q(1))) * &e2),
                )
            } else {
                Condition::new(
                    "t > (n+1)^2/(2(n+2))·eta2",
                    t.clone(),
                    Relation::Greater,
                    Some(&np1 * &np1 / (q(2) * qu(n + 2)) * &e2),
                )
            };
            vec![
                Condition::new(
                    "t > (n+1)eta2/((n+1)eta2+eta1)",
                    t.clone(),
                    Relation::Greater,
                    Some(&np1 * &e2 / (&np1 * &e2 + &e1)),
                ),
                second,
            ]
        }
        Case::Two => {
            let m1 = input.m1;
            let third = if m1 <= n + 1 {
                Condition::new(
                    "t > 1 - n(n+1)/(2(m1(n+1)-1))·eta1",
                    t.clone(),
                    Relation::Greater,
                    Some(BigRational::one() - qu(n * (n + 1)) / (q(2) * (qu(m1 * (n + 1)) - q(1))) * &e1),
                )
            } else {
                Condition::new(
                    "t > 1 - (n+1)/(2(n+2))·eta1",
                    t.clone(),
                    Relation::Greater,
                    Some(BigRational::one() - &np1 / (q(2) * qu(n + 2)) * &e1),
                )
            };
            vec![
                Condition::new("t < (n+1)eta2", t.clone(), Relation::Less, Some(&np1 * &e2)),
                Condition::new(
                    "t > (n(n+1)/2·eta1+1)/((n+1)eta1/eta2+1)",
                    t.clone(),
                    Relation::Greater,
                    Some((&half * qu(n * (n + 1)) * &e1 + q(1)) / (&np1 * &e1 / &e2 + q(1))),
                ),
                third,
            ]
        }
    };
    Ok(ThresholdReport { conditions })
}

/// [`thm59_ok`] fed with the `P^n` dimensions and the closed forms `c_0(m2)`, `c_1(m1)`.
pub fn thm59_projective(input: &ThresholdInput, case: Case) -> Result<ThresholdReport> {
    let n = input.n.ok_or_else(|| ThresholdError::Input("the ambient dimension n is required".into()))?;
    Ok(thm59_ok(
        input,
        &HomDims::projective(n),
        &c_formula(Sigma::Zero, n, input.m2),
        &c_formula(Sigma::One, n, input.m1),
        case,
    ))
}
