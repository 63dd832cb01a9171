//! Parameter sweeps over `t` with CSV export.

use std::collections::BTreeSet;
use std::io::Write;

use exactfield::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Result, ThresholdError};
use crate::examples::detect_singular;
use crate::theorems::{thm64_ok, Case, ThresholdInput};

/// A sweep over `t` for `m1 O(-2) ⊕ m2 O(-1) → n1 O` on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    /// `n`.
    pub n: usize,
    /// `m1`.
    pub m1: usize,
    /// `m2`.
    pub m2: usize,
    /// `n1`.
    pub n1: usize,
    /// The grid is `j/steps` for `0 < j < steps`.
    pub steps: usize,
    /// Condition families evaluated at each point.
    pub cases: Vec<Case>,
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    /// Numerator of `t`.
    pub t_num: String,
    /// Denominator of `t`.
    pub t_den: String,
    /// `1` or `2`.
    pub case: u8,
    /// Whether every condition of the case holds.
    pub verdict: bool,
    /// The first failing condition, empty when the verdict holds.
    pub failing_condition: String,
    /// Whether `t` is a singular value.
    pub singular_flag: bool,
}

/// The grid points together with every singular value, sorted and distinct.
pub fn sweep_points(plan: &SweepSpec) -> Result<(Vec<BigRational>, BTreeSet<BigRational>)> {
    if plan.steps < 2 {
        return Err(ThresholdError::Input("at least two steps are required".into()));
    }
    let scan = detect_singular(plan.m1, plan.m2, plan.n1)?;
    let singular: BTreeSet<BigRational> = scan.values.into_iter().collect();
    let mut points: BTreeSet<BigRational> = (1..plan.steps)
        .map(|j| BigRational::new((j as i64).into(), (plan.steps as i64).into()))
        .collect();
    points.extend(singular.iter().cloned());
    let zero = BigRational::zero();
    let one = BigRational::one();
    let points = points.into_iter().filter(|t| *t > zero && *t < one).collect();
    let singular = if scan.always.is_empty() { singular } else { BTreeSet::new() };
    Ok((points, singular))
}

/// Evaluates every point and case of the sweep.
pub fn sweep(plan: &SweepSpec) -> Result<Vec<SweepRow>> {
    let always = !detect_singular(plan.m1, plan.m2, plan.n1)?.always.is_empty();
    let (points, singular) = sweep_points(plan)?;
    let mut rows = Vec::with_capacity(points.len() * plan.cases.len());
    for t in &points {
        let input = ThresholdInput::new(Some(plan.n), plan.m1, plan.m2, plan.n1, t.clone())?;
        for &case in &plan.cases {
            let rep = thm64_ok(&input, case)?;
            rows.push(SweepRow {
                t_num: t.numer().to_string(),
                t_den: t.denom().to_string(),
                case: match case {
                    Case::One => 1,
                    Case::Two => 2,
                },
                verdict: rep.ok(),
                failing_condition: rep.first_failure().unwrap_or_default().to_string(),
                singular_flag: always || singular.contains(t),
            });
        }
    }
    Ok(rows)
}

/// Writes rows with the header `t_num,t_den,case,verdict,failing_condition,singular_flag`.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(|e| ThresholdError::Csv(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(n: usize, m1: usize, m2: usize, n1: usize) -> SweepSpec {
        SweepSpec { n, m1, m2, n1, steps: 10, cases: vec![Case::One, Case::Two] }
    }

    #[test]
    fn example_one_flags() {
        let rows = sweep(&plan(2, 1, 1, 4)).unwrap();
        let flagged: Vec<(String, String)> = rows
            .iter()
            .filter(|r| r.singular_flag && r.case == 1)
            .map(|r| (r.t_num.clone(), r.t_den.clone()))
            .collect();
        let expect = [("1", "4"), ("1", "2"), ("3", "4")];
        assert_eq!(flagged, expect.map(|(a, b)| (a.to_string(), b.to_string())).to_vec());
    }

    #[test]
    fn example_two_has_t_max_row() {
        let rows = sweep(&plan(2, 1, 2, 5)).unwrap();
        assert!(rows.iter().any(|r| r.t_num == "4" && r.t_den == "5" && r.singular_flag));
    }

    #[test]
    fn empty_window_gives_false_column() {
        let mut s = plan(1, 1, 1, 10);
        s.cases = vec![Case::Two];
        let rows = sweep(&s).unwrap();
        assert!(rows.iter().all(|r| !r.verdict && !r.failing_condition.is_empty()));
    }

    #[test]
    fn csv_header() {
        let rows = sweep(&plan(1, 1, 1, 3)).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("t_num,t_den,case,verdict,failing_condition,singular_flag\n"));
        assert_eq!(text.lines().count(), rows.len() + 1);
    }
}
