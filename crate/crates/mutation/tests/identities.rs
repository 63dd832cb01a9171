use exactfield::Field;
use mutation::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta::random::{random_chart_for, random_left_element, random_point_w0, random_right_element, random_theta, theta_with_dims, ThetaShape};
use theta::{Dims, PairElement, ThetaSpace};

fn fields() -> [Field; 3] {
    [Field::Rationals, Field::Prime(5), Field::Prime(7)]
}

fn spaces(seed: u64, count: usize) -> Vec<ThetaSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![];
    for f in fields() {
        for _ in 0..count {
            out.push(random_theta(f, &ThetaShape::default(), &mut rng));
        }
        out.push(theta_with_dims(f, Dims::from_array([2, 3, 1, 1, 1, 1, 1, 2]), 2, &mut rng));
        out.push(theta_with_dims(f, Dims::from_array([2, 4, 2, 2, 2, 1, 2, 2]), 2, &mut rng));
    }
    out
}

#[test]
fn double_dual_is_identified_with_the_original() {
    for t in spaces(1, 6) {
        let dd = DoubleDual::new(&t).unwrap();
        assert!(dd.first.theta.validate().passed(), "{:?}", dd.first.theta.validate());
        assert_eq!(dd.first.theta.dims, dual_dims(t.dims));
        assert!(dd.report(&t).passed(), "{:?}", dd.report(&t));
    }
}

#[test]
fn mutating_twice_returns_the_sign_twisted_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for t in spaces(2, 4) {
        let dd = DoubleDual::new(&t).unwrap();
        for _ in 0..3 {
            let w = random_point_w0(&t, &mut rng);
            let c = default_choice(&t, &w).unwrap();
            let (back, expected) = double_mutation(&dd, &t, &w, &c).unwrap();
            assert_eq!(back, expected);
        }
    }
}

#[test]
fn different_choices_differ_by_a_dual_group_element() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in spaces(3, 4) {
        let dual = build_dual(&t).unwrap();
        for _ in 0..3 {
            let w = random_point_w0(&t, &mut rng);
            let c1 = default_choice(&t, &w).unwrap();
            let ch = random_chart_for(&t, &w, &mut rng);
            let c2 = chart_splitting(&t, &ch, &w).unwrap().choice;
            let z1 = mutate(&dual, &t, &w, &c1).unwrap();
            let z2 = mutate(&dual, &t, &w, &c2).unwrap();
            let g = choice_change_element(&dual, &c1, &c2).unwrap();
            g.validate(&dual.theta).unwrap();
            assert_eq!(g.act(&dual.theta, &z1), z2);
        }
    }
}

#[test]
fn unipotent_moves_have_matching_choices() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for t in spaces(4, 4) {
        let dual = build_dual(&t).unwrap();
        let w = random_point_w0(&t, &mut rng);
        let c = default_choice(&t, &w).unwrap();
        let z = mutate(&dual, &t, &w, &c).unwrap();
        let g = random_right_element(&t, &mut rng);
        let alpha = Generator::Alpha0(g.alpha0.clone());
        let wa = alpha.act(&t, &w);
        assert_eq!(mutate(&dual, &t, &wa, &choice_after_alpha0(&t, &c, &g.alpha0)).unwrap(), z);
        let l = random_left_element(&t, &mut rng);
        let wb = Generator::Beta(l.beta.clone()).act(&t, &w);
        assert_eq!(mutate(&dual, &t, &wb, &choice_after_beta(&w, &c, &l.beta)).unwrap(), z);
    }
}

#[test]
fn chart_mutations_transport_along_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in spaces(5, 4) {
        let dual = build_dual(&t).unwrap();
        for _ in 0..3 {
            let w = random_point_w0(&t, &mut rng);
            let ch0 = random_chart_for(&t, &w, &mut rng);
            let g = PairElement {
                right: random_right_element(&t, &mut rng),
                left: random_left_element(&t, &mut rng),
            };
            let gw = g.act(&t, &w);
            let ch1 = if rng.gen::<bool>() && ch0.contains(&gw) {
                ch0.clone()
            } else {
                random_chart_for(&t, &gw, &mut rng)
            };
            let gamma = transport(&dual, &t, &g, &w, &ch0, &ch1).unwrap();
            gamma.validate(&dual.theta).unwrap();
            let z0 = mutate_chart(&dual, &t, &ch0, &w).unwrap();
            let z1 = mutate_chart(&dual, &t, &ch1, &gw).unwrap();
            assert_eq!(gamma.act(&dual.theta, &z0), z1);
        }
    }
}

#[test]
fn each_generator_transports_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for t in spaces(6, 3) {
        let dual = build_dual(&t).unwrap();
        let w = random_point_w0(&t, &mut rng);
        let ch0 = random_chart_for(&t, &w, &mut rng);
        let g = PairElement {
            right: random_right_element(&t, &mut rng),
            left: random_left_element(&t, &mut rng),
        };
        for gen in decompose(&t, &g).unwrap() {
            let gw = gen.act(&t, &w);
            let ch1 = if matches!(gen, Generator::B(_)) {
                random_chart_for(&t, &gw, &mut rng)
            } else {
                ch0.clone()
            };
            let gamma = generator_transport(&dual, &t, &gen, &w, &ch0, &ch1).unwrap();
            let z0 = mutate_chart(&dual, &t, &ch0, &w).unwrap();
            let z1 = mutate_chart(&dual, &t, &ch1, &gw).unwrap();
            assert_eq!(gamma.act(&dual.theta, &z0), z1, "{gen:?}");
        }
        assert_eq!(decompose(&t, &g).unwrap().iter().fold(w.clone(), |p, s| s.act(&t, &p)), g.act(&t, &w));
    }
}
