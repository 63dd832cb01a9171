//! Closed-form singular values and quotient conditions against independent recomputation.

use constants::{c_formula, Sigma};
use exactfield::{all_vectors, rat, BigRational, Field, Matrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stability::{is_semistable_rs, GroupMode, SearchOptions};
use thresholds::{
    detect_singular, singular_values_ex1, singular_values_ex2, thm56_range, thm59_ok, thm59_projective, thm64_ok, Case,
    HomDims, ThresholdInput,
};
use typers::{binomial, projective_space_hom_data, HomData, Multiplicities, Polarization, RsMorphism};

fn q(k: usize) -> BigRational {
    rat(k as i64, 1)
}

#[test]
fn example_one_reproduces_values_count_and_dimensions() {
    for n in 1..=5usize {
        let ex = singular_values_ex1(n).unwrap();
        let expect: Vec<BigRational> = (1..=n + 1).map(|k| rat(k as i64, n as i64 + 2)).collect();
        assert_eq!(ex.values, expect);
        assert_eq!(ex.quotient_count, n);

        let d = HomDims::projective(n);
        let (m1, m2, n1) = (1, 1, n + 2);
        let dim_w = n1 * (m1 * d.h1 + m2 * d.h2);
        let dim_g = m1 * m1 + m2 * m2 + d.a * m1 * m2 + n1 * n1 - 1;
        assert_eq!(ex.dim_generic, dim_w - dim_g);
        assert_eq!(ex.dim_last, binomial(n + 2, 2) - 1);
    }
    let ex = singular_values_ex1(2).unwrap();
    assert_eq!(ex.values, vec![rat(1, 4), rat(1, 2), rat(3, 4)]);
    assert_eq!((ex.dim_generic, ex.dim_last), (16, 5));
}

#[test]
fn example_one_window_matches_theorem_conditions() {
    for n in 1..=5usize {
        let ex = singular_values_ex1(n).unwrap();
        let c0 = c_formula(Sigma::Zero, n, 1);
        for j in 1..60 {
            let t = rat(j, 60);
            let input = ThresholdInput::new(Some(n), 1, 1, n + 2, t.clone()).unwrap();
            let one = thm64_ok(&input, Case::One).unwrap().ok();
            let two = thm64_ok(&input, Case::Two).unwrap().ok();
            assert_eq!(one, t > ex.empty_threshold);
            assert_eq!(two, t > ex.window_low && t < ex.empty_threshold);
            assert_eq!(one, thresholds::thm53_ok(&HomDims::projective(n), 1, 1, n + 2, &t, &c0).ok());
        }
    }
}

#[test]
fn example_two_maximum_and_chain() {
    for n in 1..=4usize {
        for k in 2..=6usize {
            let ex = singular_values_ex2(n, k).unwrap();
            assert_eq!(ex.t_max.as_ref(), Some(&ex.t_max_formula));
            if n >= 2 {
                assert!(ex.strict_chain(), "n={n} k={k}");
            } else {
                assert_eq!(ex.t2, ex.t_max_formula);
            }
            let scan = detect_singular(1, k, n * k + 1).unwrap();
            assert!(scan.always.is_empty());
            for v in &ex.values {
                assert!(scan.values.binary_search(v).is_ok(), "n={n} k={k} t={v}");
            }
            assert_eq!(scan.values.last(), ex.t_max.as_ref());
        }
    }
}

#[test]
fn projective_conditions_agree_with_general_form_on_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4usize);
        let m1 = rng.gen_range(1..=6usize);
        let m2 = rng.gen_range(1..=6usize);
        let n1 = rng.gen_range(1..=12usize);
        let den = rng.gen_range(2..=40i64);
        let t = rat(rng.gen_range(1..den), den);
        let input = ThresholdInput::new(Some(n), m1, m2, n1, t).unwrap();
        for case in [Case::One, Case::Two] {
            let a = thm64_ok(&input, case).unwrap();
            let b = thm59_projective(&input, case).unwrap();
            assert_eq!(a.ok(), b.ok());
            let bounds = |r: &thresholds::ThresholdReport| r.conditions.iter().map(|c| c.bound.clone()).collect::<Vec<_>>();
            assert_eq!(bounds(&a), bounds(&b));
        }
    }
}

#[test]
fn reduced_bound_equals_case_two_third_inequality() {
    for n in 1..=5usize {
        let input = ThresholdInput::new(Some(n), 1, 1, n + 2, rat(1, 2)).unwrap();
        let rep = thm64_ok(&input, Case::Two).unwrap();
        assert_eq!(rep.conditions[2].bound, Some(rat(n as i64 + 3, 2 * (n as i64 + 2))));
    }
}

#[test]
fn hom_dims_from_projective_data() {
    for n in 1..=3 {
        let h = projective_space_hom_data(Field::Rationals, n, &[-2, -1], &[0]).unwrap();
        assert_eq!(HomDims::from_hom_data(&h).unwrap(), HomDims::projective(n));
    }
}

fn every_point(f: Field, h: &HomData, mult: &Multiplicities) -> Vec<RsMorphism> {
    let zero = RsMorphism::zero(h, mult);
    let total: usize = zero.blocks.iter().flatten().map(|b| b.rows() * b.cols()).sum();
    all_vectors(f, total, 1 << 16)
        .unwrap()
        .into_iter()
        .map(|v| {
            let mut w = zero.clone();
            let mut pos = 0;
            for blk in w.blocks.iter_mut().flatten() {
                let (r, c) = blk.shape();
                *blk = Matrix::from_fn(f, r, c, |x, y| v.get(pos + x * c + y, 0).clone());
                pos += r * c;
            }
            w
        })
        .collect()
}

#[test]
fn strictly_semistable_points_occur_exactly_at_singular_values() {
    let f = Field::Prime(2);
    let h = projective_space_hom_data(f, 1, &[-2, -1], &[0]).unwrap();
    let mult = Multiplicities::new(&[1, 1], &[3]);
    let points = every_point(f, &h, &mult);
    let singular = singular_values_ex1(1).unwrap().values;
    let opts = SearchOptions::default();
    for j in 1..12 {
        let t = rat(j, 12);
        let pol = Polarization::new(vec![rat(1, 1) - &t, t.clone()], vec![rat(1, 3)], mult.clone()).unwrap();
        let strict_ss = points.iter().any(|w| {
            let v = is_semistable_rs(w, &h, &pol, GroupMode::Full, true, &opts).unwrap();
            v.semistable && !v.stable
        });
        assert_eq!(strict_ss, singular.contains(&t), "t = {t}");
    }
}

proptest! {
    #[test]
    fn range_is_exact_at_left_bound(n1 in 2usize..8, extra in 1usize..6) {
        let mu1 = rat(1, n1 as i64 + 1);
        let mult = Multiplicities::new(&[1], &[n1, extra]);
        let mu2 = (rat(1, 1) - &mu1 * q(n1)) / q(extra);
        let pol = Polarization::new(vec![rat(1, 1)], vec![mu1, mu2], mult).unwrap();
        prop_assert!(thm56_range(&pol, 0).unwrap().get("mu1 >= 1/(n1+1)").unwrap().holds());
    }

    #[test]
    fn general_form_is_monotone_in_c(n in 1usize..4, m1 in 1usize..5, m2 in 1usize..5, n1 in 1usize..10, j in 1i64..30) {
        let t = rat(j, 30);
        let input = ThresholdInput::new(Some(n), m1, m2, n1, t).unwrap();
        let d = HomDims::projective(n);
        let lo = thm59_ok(&input, &d, &rat(0, 1), &rat(0, 1), Case::One).ok();
        let c = thm59_ok(&input, &d, &c_formula(Sigma::Zero, n, m2), &rat(0, 1), Case::One).ok();
        prop_assert!(!c || lo);
    }
}
