//! Closed forms of the constants checked against witnesses and subspace scans.

use std::collections::HashMap;

use constants::*;
use exactfield::{all_vectors, rat, Field, Matrix, Subspace};
use proptest::prelude::*;

const Q: Field = Field::Rationals;
const F2: Field = Field::Prime(2);

#[test]
fn witnesses_attain_the_closed_form() {
    for which in [Sigma::Zero, Sigma::One] {
        for n in 1..=3 {
            for m in 1..=n + 1 {
                let t = TauMap::sigma(which, Q, n);
                let k = rank_one_witness(&t, m).unwrap();
                assert_eq!(delta(&t, &k, m).unwrap(), c_formula(which, n, m), "{which:?} n={n} m={m}");
            }
        }
    }
}

#[test]
fn seeded_scans_never_exceed_the_closed_form() {
    for which in [Sigma::Zero, Sigma::One] {
        for n in 1..=3 {
            for m in 1..=n + 1 {
                let cfg = SearchConfig {
                    samples: 1000,
                    seed: (n * 10 + m) as u64,
                    reference: Some(c_formula(which, n, m)),
                    ..SearchConfig::default()
                };
                let rep = c_tau_search(&TauMap::sigma(which, Q, n), m, &cfg).unwrap();
                assert_eq!(rep.scanned, 1000);
                assert_eq!(rep.exceeds_reference(), Some(false), "{which:?} n={n} m={m}");
                assert_eq!(rep.witness_attains_reference(), Some(true));
            }
        }
    }
}

#[test]
fn exhaustive_small_field_scans_reproduce_the_closed_form() {
    for p in [2, 3] {
        for which in [Sigma::Zero, Sigma::One] {
            for (n, m) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)] {
                let cfg = SearchConfig { exhaustive_prime: Some(p), exhaustive_budget: 100_000, ..SearchConfig::default() };
                let rep = c_tau_search(&TauMap::sigma(which, Q, n), m, &cfg).unwrap();
                assert_eq!(rep.mode, ScanMode::Exhaustive);
                assert_eq!(rep.max_found, Some(c_formula(which, n, m)), "p={p} {which:?} n={n} m={m}");
            }
        }
    }
}

#[test]
fn beyond_dim_h_the_constant_stabilizes() {
    for which in [Sigma::Zero, Sigma::One] {
        let cfg = SearchConfig { exhaustive_prime: Some(2), ..SearchConfig::default() };
        let t = TauMap::sigma(which, Q, 1);
        let at_h = c_tau_search(&t, 2, &cfg).unwrap();
        let beyond = c_tau_search(&t, 3, &cfg).unwrap();
        assert_eq!(at_h.max_found, beyond.max_found);
        assert!(beyond.witness_value.is_none());
    }
}

#[test]
fn capped_branch_values() {
    assert_eq!(c_formula(Sigma::Zero, 2, 5), rat(3, 8));
    assert_eq!(c_formula(Sigma::One, 2, 3), rat(15, 8));
    for n in 1..=3 {
        for which in [Sigma::Zero, Sigma::One] {
            assert_eq!(c_branch(which, Branch::Growing, n, n + 1), c_branch(which, Branch::Capped, n, n + 1));
        }
    }
}

fn length_table(h: usize, m: usize) -> HashMap<Matrix, usize> {
    let hv = all_vectors(F2, h, 1 << 10).unwrap();
    let mv = all_vectors(F2, m, 1 << 10).unwrap();
    let pure: Vec<Matrix> = hv.iter().flat_map(|a| mv.iter().map(move |b| a.kron(b))).collect();
    let mut dist = HashMap::from([(Matrix::zeros(F2, h * m, 1), 0)]);
    let mut frontier = vec![Matrix::zeros(F2, h * m, 1)];
    for d in 1..=h.min(m) {
        let mut next = vec![];
        for x in &frontier {
            for p in &pure {
                let y = x + p;
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    dist
}

#[test]
fn length_is_the_shortest_expansion() {
    for (h, m) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let table = length_table(h, m);
        assert_eq!(table.len(), 1 << (h * m));
        for u in all_vectors(F2, h * m, 1 << 10).unwrap() {
            assert_eq!(length(&u, h, m), table[&u]);
        }
    }
}

#[test]
fn genericity_matches_the_definition() {
    let (h, m) = (2, 2);
    let proper_m: Vec<Subspace> = (0..m).flat_map(|d| exactfield::enumerate_subspaces(F2, m, d, 1 << 10).unwrap()).collect();
    for d in 1..h * m {
        for k in exactfield::enumerate_subspaces(F2, h * m, d, 1 << 12).unwrap() {
            let contained = proper_m.iter().any(|mp| {
                let big = Subspace::span(&Matrix::identity(F2, h).kron(mp.basis()));
                big.contains_subspace(&k)
            });
            assert_eq!(is_generic(&k, h, m).unwrap(), !contained);
        }
    }
}

#[test]
fn report_serializes_exact_strings() {
    let cfg = SearchConfig { samples: 10, seed: 9, reference: Some(rat(1, 5)), ..SearchConfig::default() };
    let rep = c_tau_search(&TauMap::sigma0(Q, 2), 2, &cfg).unwrap();
    let json = serde_json::to_string(&rep.to_doc()).unwrap();
    assert!(json.contains("\"witness_value\":\"1/5\""));
    assert!(json.contains("\"seed\":9"));
    let again = c_tau_search(&TauMap::sigma0(Q, 2), 2, &cfg).unwrap();
    assert_eq!(rep, again);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn subspaces_with_short_vectors_obey_the_splitting_bound(
        n in 1usize..=2,
        m in 2usize..=3,
        short in 1usize..=2,
        extra in 0usize..3,
        seed in 0u64..1000,
        sigma_one in any::<bool>(),
    ) {
        prop_assume!(short < m && m <= n + 1);
        let which = if sigma_one { Sigma::One } else { Sigma::Zero };
        let t = TauMap::sigma(which, Q, n);
        let h = t.h;
        let mut gens = vec![];
        let mut u = Matrix::zeros(Q, h * m, 1);
        for i in 0..short {
            u.set(i * m + i, 0, Q.one());
        }
        gens.push(u);
        for j in 0..extra {
            gens.push(random_subspace(Q, h * m, seed, j as u64).basis().col(0));
        }
        let k = Subspace::span(&Matrix::hcat(Q, h * m, &gens));
        prop_assume!(k.dim() < h * m && is_generic(&k, h, m).unwrap());
        let bound = c_formula(which, n, short).max(c_formula(which, n, m - short));
        prop_assert!(delta(&t, &k, m).unwrap() <= bound);
    }
}
