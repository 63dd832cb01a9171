//! Exhaustive checks of the Kronecker oracle and the Kronecker mutation over GF(2).

use exactfield::{all_vectors, Field, Matrix};
use stability::{in_orbit, kronecker_mutate, kronecker_semistable, KroneckerModule};

const F2: Field = Field::Prime(2);

fn every_module(q: usize, m: usize, n: usize) -> Vec<KroneckerModule> {
    all_vectors(F2, n * q * m, 1 << 20)
        .unwrap()
        .into_iter()
        .map(|v| KroneckerModule::new(q, m, n, v.reshape(n, q * m)).unwrap())
        .collect()
}

#[test]
fn double_mutation_returns_to_the_orbit() {
    for (q, m, n) in [(2, 1, 1), (3, 1, 1), (3, 1, 2)] {
        let mut surjective = 0;
        for k in every_module(q, m, n) {
            if k.f.rank() != n {
                assert!(kronecker_mutate(&k).is_err());
                continue;
            }
            surjective += 1;
            let a = kronecker_mutate(&k).unwrap();
            assert_eq!((a.q, a.m, a.n), (q, m, q * m - n));
            let aa = kronecker_mutate(&a).unwrap();
            assert!(in_orbit(&k, &aa, 1 << 20).unwrap(), "A(A(f)) left the orbit for {:?}", k.f);
            let vk = kronecker_semistable(&k, false, 1 << 20).unwrap();
            let va = kronecker_semistable(&a, false, 1 << 20).unwrap();
            assert_eq!(vk.semistable, va.semistable);
            assert_eq!(vk.stable, va.stable);
        }
        assert!(surjective > 0);
    }
}

#[test]
fn verdicts_are_orbit_invariant() {
    let gm: Vec<Matrix> = stability::general_linear_group(F2, 2, 1 << 10).unwrap();
    assert_eq!(gm.len(), 6);
    for k in every_module(2, 2, 1) {
        let base = kronecker_semistable(&k, false, 1 << 10).unwrap();
        for g in &gm {
            let moved = k.act(g, &Matrix::identity(F2, 1)).unwrap();
            let v = kronecker_semistable(&moved, false, 1 << 10).unwrap();
            assert_eq!((v.semistable, v.stable), (base.semistable, base.stable));
        }
    }
}

#[test]
fn witnesses_violate_the_slope_inequality() {
    for k in every_module(2, 2, 2) {
        for strict in [false, true] {
            let v = kronecker_semistable(&k, strict, 1 << 10).unwrap();
            assert!(!v.stable || v.semistable);
            assert_eq!(v.witness.is_some(), !v.holds(strict));
            if let Some(w) = v.witness {
                let (m1, n1) = (w.sources[0].dim(), w.targets[0].dim());
                assert!(m1 > 0 && n1 < k.n);
                assert_eq!(w.targets[0], k.image_of(w.sources[0].basis()));
                if strict {
                    assert!(n1 * k.m <= k.n * m1);
                } else {
                    assert!(n1 * k.m < k.n * m1);
                }
            }
        }
    }
}
