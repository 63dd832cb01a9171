//! Singular values of the parameter `t` for two families on `P^n`.

use std::collections::BTreeSet;

use exactfield::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ThresholdError};

fn q(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

fn qu(k: usize) -> BigRational {
    q(k as i64)
}

/// Singular values and companion data for `O(-2) ⊕ O(-1) → (n+2) O` on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example1 {
    /// `n`.
    pub n: usize,
    /// `k/(n+2)` for `1 ≤ k ≤ n+1`, increasing.
    pub values: Vec<BigRational>,
    /// Lower end `(n+3)/(2(n+2))` of the window of nonempty quotients.
    pub window_low: BigRational,
    /// Upper end `(n+1)/(n+2)` of the window; larger `t` give the empty quotient.
    pub empty_threshold: BigRational,
    /// Number of distinct nonempty quotients.
    pub quotient_count: usize,
    /// `(n+2)(n²+3n−2)/2`.
    pub dim_generic: usize,
    /// `n(n+3)/2`.
    pub dim_last: usize,
}

/// Computes [`Example1`] for `n ≥ 1`.
pub fn singular_values_ex1(n: usize) -> Result<Example1> {
    if n == 0 {
        return Err(ThresholdError::Input("n must be at least 1".into()));
    }
    let values: Vec<BigRational> = (1..=n + 1).map(|k| qu(k) / qu(n + 2)).collect();
    let window_low = qu(n + 3) / qu(2 * (n + 2));
    let empty_threshold = qu(n + 1) / qu(n + 2);
    let quotient_count = count_pieces(&window_low, &empty_threshold, &values);
    Ok(Example1 {
        n,
        values,
        window_low,
        empty_threshold,
        quotient_count,
        dim_generic: (n + 2) * (n * n + 3 * n - 2) / 2,
        dim_last: n * (n + 3) / 2,
    })
}

/// Number of pieces of the closed interval `[lo, hi]` cut by `walls`: every wall inside
/// counts once, as does every nonempty open gap between consecutive cut points.
pub fn count_pieces(lo: &BigRational, hi: &BigRational, walls: &[BigRational]) -> usize {
    let inside: BTreeSet<&BigRational> = walls.iter().filter(|w| *w >= lo && *w <= hi).collect();
    let mut cuts: Vec<&BigRational> = vec![lo];
    cuts.extend(inside.iter().copied().filter(|w| *w != lo && *w != hi));
    cuts.push(hi);
    let gaps = cuts.windows(2).filter(|w| w[0] < w[1]).count();
    gaps + inside.len()
}

/// Singular values and their maximum for `O(-2) ⊕ k O(-1) → (nk+1) O` on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example2 {
    /// `n`.
    pub n: usize,
    /// `k`.
    pub k: usize,
    /// Sorted distinct values `k(nk−p)/(k'(nk+1))` inside `(0,1)`.
    pub values: Vec<BigRational>,
    /// Largest enumerated value, if any.
    pub t_max: Option<BigRational>,
    /// Closed form `nk/(nk+1)`.
    pub t_max_formula: BigRational,
    /// `1 − 1/(1+(n+1)k)`.
    pub t1: BigRational,
    /// `1 − (n+1)/(2(nk+1))`.
    pub t2: BigRational,
}

impl Example2 {
    /// Whether `t2 < t_max < t1`.
    pub fn strict_chain(&self) -> bool {
        self.t_max.as_ref().map_or(false, |m| self.t2 < *m && *m < self.t1)
    }
}

/// Computes [`Example2`] for `n ≥ 1`, `k ≥ 1`.
pub fn singular_values_ex2(n: usize, k: usize) -> Result<Example2> {
    if n == 0 || k == 0 {
        return Err(ThresholdError::Input("n and k must be at least 1".into()));
    }
    let nk = n * k;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut set = BTreeSet::new();
    for kp in 1..k {
        for p in 0..nk {
            let t = qu(k * (nk - p)) / qu(kp * (nk + 1));
            if t > zero && t < one {
                set.insert(t);
            }
        }
    }
    let values: Vec<BigRational> = set.into_iter().collect();
    Ok(Example2 {
        n,
        k,
        t_max: values.last().cloned(),
        values,
        t_max_formula: qu(nk) / qu(nk + 1),
        t1: one.clone() - one.clone() / qu(1 + (n + 1) * k),
        t2: one - qu(n + 1) / qu(2 * (nk + 1)),
    })
}

/// A dimension vector `(a, b, c) = (dim M'_1, dim M'_2, dim N'_1)` balancing a type-(2,1)
/// polarization at some `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Balance {
    /// `dim M'_1`.
    pub a: usize,
    /// `dim M'_2`.
    pub b: usize,
    /// `dim N'_1`.
    pub c: usize,
}

/// Result of the generic singular-value detector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularScan {
    /// Sorted distinct `t ∈ (0,1)` at which some dimension vector balances.
    pub values: Vec<BigRational>,
    /// Dimension vectors balancing for every `t`.
    pub always: Vec<Balance>,
}

/// Enumerates integer vectors `0 ≤ a ≤ m1`, `0 ≤ b ≤ m2`, `0 ≤ c < n1`, not all zero, with
/// `(1−t)a/m1 + t b/m2 = c/n1`, and collects the solutions `t ∈ (0,1)`.
pub fn detect_singular(m1: usize, m2: usize, n1: usize) -> Result<SingularScan> {
    if m1 == 0 || m2 == 0 || n1 == 0 {
        return Err(ThresholdError::Input("multiplicities must be positive".into()));
    }
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut set = BTreeSet::new();
    let mut always = Vec::new();
    for a in 0..=m1 {
        for b in 0..=m2 {
            for c in 0..n1 {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                let x = qu(a) / qu(m1);
                let slope = qu(b) / qu(m2) - &x;
                let rhs = qu(c) / qu(n1) - &x;
                if slope.is_zero() {
                    if rhs.is_zero() {
                        always.push(Balance { a, b, c });
                    }
                    continue;
                }
                let t = rhs / slope;
                if t > zero && t < one {
                    set.insert(t);
                }
            }
        }
    }
    Ok(SingularScan { values: set.into_iter().collect(), always })
}

/// Whether `t` is flagged by [`detect_singular`].
pub fn is_singular(m1: usize, m2: usize, n1: usize, t: &BigRational) -> Result<bool> {
    let scan = detect_singular(m1, m2, n1)?;
    Ok(!scan.always.is_empty() || scan.values.binary_search(t).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactfield::rat;

    #[test]
    fn example_one_at_two() {
        let ex = singular_values_ex1(2).unwrap();
        assert_eq!(ex.values, vec![rat(1, 4), rat(1, 2), rat(3, 4)]);
        assert_eq!((ex.dim_generic, ex.dim_last, ex.quotient_count), (16, 5, 2));
        assert_eq!(ex.window_low, rat(5, 8));
    }

    #[test]
    fn example_one_at_one() {
        assert_eq!(singular_values_ex1(1).unwrap().values, vec![rat(1, 3), rat(2, 3)]);
        assert!(singular_values_ex1(0).is_err());
    }

    #[test]
    fn pieces() {
        let walls = [rat(1, 2)];
        assert_eq!(count_pieces(&rat(0, 1), &rat(1, 1), &walls), 3);
        assert_eq!(count_pieces(&rat(1, 2), &rat(1, 1), &walls), 2);
        assert_eq!(count_pieces(&rat(1, 2), &rat(1, 2), &walls), 1);
    }

    #[test]
    fn example_two_values() {
        let ex = singular_values_ex2(2, 2).unwrap();
        assert_eq!(ex.t_max, Some(rat(4, 5)));
        assert_eq!((ex.t1.clone(), ex.t2.clone()), (rat(6, 7), rat(7, 10)));
        assert!(ex.strict_chain());
        let ex = singular_values_ex2(1, 2).unwrap();
        assert_eq!(ex.t_max, Some(rat(2, 3)));
        assert_eq!(ex.t2, rat(2, 3));
        assert!(!ex.strict_chain());
        assert_eq!(singular_values_ex2(3, 1).unwrap().t_max, None);
    }

    #[test]
    fn detector_on_example_one() {
        for n in 1..=5 {
            let scan = detect_singular(1, 1, n + 2).unwrap();
            assert_eq!(scan.values, singular_values_ex1(n).unwrap().values);
            assert!(scan.always.is_empty());
        }
    }

    #[test]
    fn detector_flags_degenerate_balances() {
        let scan = detect_singular(2, 2, 2).unwrap();
        assert!(scan.always.contains(&Balance { a: 1, b: 1, c: 1 }));
        assert!(is_singular(2, 2, 2, &rat(1, 3)).unwrap());
    }
}
