//! Group-law and compatibility properties of the actions on `W`.

use exactfield::Field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use theta::random::{random_left_element, random_point_w0, random_right_element, random_theta, ThetaShape};
use theta::{act_left, act_right, in_w0, validate_theta, PairElement};

const Q: Field = Field::Rationals;

#[test]
fn random_spaces_validate() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let t = random_theta(Q, &ThetaShape::default(), &mut rng);
        let rep = validate_theta(&t);
        assert!(rep.passed(), "{rep:?}");
    }
    for p in [2u32, 3, 5] {
        for _ in 0..20 {
            let t = random_theta(Field::Prime(p), &ThetaShape::default(), &mut rng);
            assert!(validate_theta(&t).passed());
        }
    }
}

#[test]
fn group_laws_match_double_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let t = random_theta(Q, &ThetaShape::default(), &mut rng);
        let w = random_point_w0(&t, &mut rng);
        let (g, h) = (random_right_element(&t, &mut rng), random_right_element(&t, &mut rng));
        g.validate(&t).unwrap();
        assert_eq!(act_right(&t, &w, &g.compose(&h)), act_right(&t, &act_right(&t, &w, &g), &h));
        let (a, b) = (random_left_element(&t, &mut rng), random_left_element(&t, &mut rng));
        a.validate(&t).unwrap();
        assert_eq!(act_left(&t, &w, &a.compose(&b)), act_left(&t, &act_left(&t, &w, &b), &a));
        let gi = g.inverse().unwrap();
        assert_eq!(act_right(&t, &act_right(&t, &w, &g), &gi), w);
        let ai = a.inverse().unwrap();
        assert_eq!(act_left(&t, &act_left(&t, &w, &a), &ai), w);
    }
}

#[test]
fn left_and_right_actions_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let t = random_theta(Q, &ThetaShape::default(), &mut rng);
        let w = random_point_w0(&t, &mut rng);
        let r = random_right_element(&t, &mut rng);
        let l = random_left_element(&t, &mut rng);
        assert_eq!(
            act_left(&t, &act_right(&t, &w, &r), &l),
            act_right(&t, &act_left(&t, &w, &l), &r)
        );
        let g = PairElement { right: r, left: l };
        g.validate(&t).unwrap();
        let h = PairElement {
            right: random_right_element(&t, &mut rng),
            left: random_left_element(&t, &mut rng),
        };
        assert_eq!(g.compose(&h).act(&t, &w), g.act(&t, &h.act(&t, &w)));
    }
}

#[test]
fn w0_is_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let t = random_theta(Q, &ThetaShape::default(), &mut rng);
        let mut w = random_point_w0(&t, &mut rng);
        if rand::Rng::gen::<bool>(&mut rng) {
            w.psi2 = exactfield::Matrix::zeros(Q, t.dims.n2, t.dims.m);
        }
        let g = PairElement {
            right: random_right_element(&t, &mut rng),
            left: random_left_element(&t, &mut rng),
        };
        assert_eq!(in_w0(&w), in_w0(&g.act(&t, &w)));
    }
}
