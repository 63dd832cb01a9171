//! Acceptance run: one pass/fail line per criterion, nonzero exit when any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use constants::{branch, c_branch, c_formula, c_tau_search, delta, rank_one_witness, Branch, SearchConfig, Sigma, TauMap};
use exactfield::{all_vectors, rat, BigRational, Field, Matrix};
use mutation::{
    build_dual, chart_splitting, choice_after_alpha0, choice_after_beta, choice_change_element, decompose, default_choice,
    double_mutation, generator_transport, mutate, mutate_chart, transport, DoubleDual, Generator,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stability::{compare_stability, in_orbit, kronecker_mutate, kronecker_semistable, KroneckerModule, SearchOptions};
use theta::random::{random_chart_for, random_left_element, random_point_w0, random_right_element, random_theta, ThetaShape};
use theta::{PairElement, ThetaSpace};
use thresholds::{singular_values_ex1, singular_values_ex2, thm59_projective, thm64_ok, Case, HomDims, ThresholdInput};
use typers::{
    binomial, build_theta_p, in_w0_p, map_polarization, projective_space_hom_data, HomData, Multiplicities, Polarization,
    RsMorphism,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

fn rational_spaces(seed: u64, count: usize) -> Vec<ThetaSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_theta(Field::Rationals, &ThetaShape::default(), &mut rng)).collect()
}

fn involution() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let spaces = rational_spaces(100, 200);
    for (i, t) in spaces.iter().enumerate() {
        ensure(t.dims.as_array().iter().all(|&d| d <= 4), || format!("instance {i} exceeds dimension 4"))?;
        let dd = DoubleDual::new(t).map_err(|e| e.to_string())?;
        let w = random_point_w0(t, &mut rng);
        let c = default_choice(t, &w).map_err(|e| e.to_string())?;
        let (back, expected) = double_mutation(&dd, t, &w, &c).map_err(|e| e.to_string())?;
        ensure(back == expected, || format!("instance {i}: z(z(w)) differs from the sign conjugate"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("200 instances over Q in {:?}", start.elapsed()))
}

fn choice_and_equivariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut counts = [0usize; 9];
    for (i, t) in rational_spaces(200, 200).iter().enumerate() {
        let err = |e: mutation::MutationError| format!("instance {i}: {e}");
        let dual = build_dual(t).map_err(err)?;
        let w = random_point_w0(t, &mut rng);
        let c = default_choice(t, &w).map_err(err)?;
        let z = mutate(&dual, t, &w, &c).map_err(err)?;

        let ch = random_chart_for(t, &w, &mut rng);
        let c2 = chart_splitting(t, &ch, &w).map_err(err)?.choice;
        let z2 = mutate(&dual, t, &w, &c2).map_err(err)?;
        let g = choice_change_element(&dual, &c, &c2).map_err(err)?;
        ensure(g.validate(&dual.theta).is_ok() && g.act(&dual.theta, &z) == z2, || format!("instance {i}: choice change"))?;
        counts[0] += 1;

        let right = random_right_element(t, &mut rng);
        let wa = Generator::Alpha0(right.alpha0.clone()).act(t, &w);
        ensure(mutate(&dual, t, &wa, &choice_after_alpha0(t, &c, &right.alpha0)).map_err(err)? == z, || {
            format!("instance {i}: alpha0 move")
        })?;
        let left = random_left_element(t, &mut rng);
        let wb = Generator::Beta(left.beta.clone()).act(t, &w);
        ensure(mutate(&dual, t, &wb, &choice_after_beta(&w, &c, &left.beta)).map_err(err)? == z, || {
            format!("instance {i}: beta move")
        })?;
        counts[1] += 1;

        let pair = PairElement { right: random_right_element(t, &mut rng), left: random_left_element(t, &mut rng) };
        let ch0 = random_chart_for(t, &w, &mut rng);
        for gen in decompose(t, &pair).map_err(err)? {
            let gw = gen.act(t, &w);
            let ch1 = if matches!(gen, Generator::B(_)) { random_chart_for(t, &gw, &mut rng) } else { ch0.clone() };
            let gamma = generator_transport(&dual, t, &gen, &w, &ch0, &ch1).map_err(err)?;
            let z0 = mutate_chart(&dual, t, &ch0, &w).map_err(err)?;
            let z1 = mutate_chart(&dual, t, &ch1, &gw).map_err(err)?;
            ensure(gamma.act(&dual.theta, &z0) == z1, || format!("instance {i}: generator {gen:?}"))?;
            let slot = match gen {
                Generator::R(_) => 2,
                Generator::Alpha0(_) => 3,
                Generator::B(_) => 4,
                Generator::GlM(_) => 5,
                Generator::Beta(_) => 6,
                Generator::L(_) => 7,
            };
            counts[slot] += 1;
        }
        let gw = pair.act(t, &w);
        let ch1 = random_chart_for(t, &gw, &mut rng);
        let gamma = transport(&dual, t, &pair, &w, &ch0, &ch1).map_err(err)?;
        let z0 = mutate_chart(&dual, t, &ch0, &w).map_err(err)?;
        let z1 = mutate_chart(&dual, t, &ch1, &gw).map_err(err)?;
        ensure(gamma.act(&dual.theta, &z0) == z1, || format!("instance {i}: composite transport"))?;
        counts[8] += 1;
    }
    ensure(counts.iter().all(|&c| c >= 200), || format!("too few instances per family: {counts:?}"))?;
    Ok(format!("instances per family {counts:?}, zero failures"))
}

fn degree_lists(len: usize, start: i64) -> Vec<Vec<i64>> {
    let base: Vec<i64> = (0..len as i64).map(|i| start + i).collect();
    let mut out = vec![base.clone()];
    if len >= 2 {
        let mut wide = base;
        wide[0] -= 1;
        out.push(wide);
    }
    out
}

fn dual_consistency() -> Outcome {
    let mut checked = 0;
    for n in 1..=3usize {
        for r in 1..=3usize {
            for s in 1..=(4 - r) {
                for e in degree_lists(r, -(r as i64)) {
                    for f in degree_lists(s, 0) {
                        let f: Vec<i64> = f.iter().map(|x| x - f[0]).collect();
                        let field = if n <= 2 { Field::Rationals } else { Field::Prime(32003) };
                        let h = projective_space_hom_data(field, n, &e, &f).map_err(|e| e.to_string())?;
                        let mut nn = vec![1; h.s];
                        nn[0] = 2;
                        let mult = Multiplicities::new(&vec![1; h.r], &nn);
                        for p in 0..h.r {
                            let Ok(t) = build_theta_p(&h, &mult, p) else { continue };
                            let tag = format!("P^{n} e={e:?} f={f:?} p={p}");
                            ensure(t.validate().passed(), || format!("{tag}: theta fails validation"))?;
                            let dd = DoubleDual::new(&t).map_err(|e| format!("{tag}: {e}"))?;
                            ensure(dd.first.theta.validate().passed(), || format!("{tag}: dual fails validation"))?;
                            ensure(dd.report(&t).passed(), || format!("{tag}: double dual differs"))?;
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    for (i, t) in rational_spaces(300, 20).iter().enumerate() {
        let dd = DoubleDual::new(t).map_err(|e| e.to_string())?;
        ensure(dd.first.theta.validate().passed() && dd.report(t).passed(), || format!("random instance {i}"))?;
        checked += 1;
    }
    ensure(checked > 40, || format!("only {checked} spaces checked"))?;
    Ok(format!("{checked} spaces, dual validates and D(D(theta)) is identified with theta"))
}

fn kronecker_correspondence() -> Outcome {
    let start = Instant::now();
    let f2 = Field::Prime(2);
    let mut surjective = 0;
    for (q, m, n) in [(2, 1, 1), (3, 1, 1), (3, 1, 2)] {
        for v in all_vectors(f2, n * q * m, 1 << 20).map_err(|e| e.to_string())? {
            let k = KroneckerModule::new(q, m, n, v.reshape(n, q * m)).map_err(|e| e.to_string())?;
            if k.f.rank() != n {
                continue;
            }
            surjective += 1;
            let a = kronecker_mutate(&k).map_err(|e| e.to_string())?;
            let aa = kronecker_mutate(&a).map_err(|e| e.to_string())?;
            ensure(in_orbit(&k, &aa, 1 << 20).map_err(|e| e.to_string())?, || format!("A(A(f)) left the orbit of {:?}", k.f))?;
            let vk = kronecker_semistable(&k, false, 1 << 20).map_err(|e| e.to_string())?;
            let va = kronecker_semistable(&a, false, 1 << 20).map_err(|e| e.to_string())?;
            ensure((vk.semistable, vk.stable) == (va.semistable, va.stable), || format!("verdicts differ for {:?}", k.f))?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{surjective} surjective maps over GF(2) in {:?}", start.elapsed()))
}

fn every_point(f: Field, h: &HomData, mult: &Multiplicities) -> Result<Vec<RsMorphism>, String> {
    let zero = RsMorphism::zero(h, mult);
    let total: usize = zero.blocks.iter().flatten().map(|b| b.rows() * b.cols()).sum();
    Ok(all_vectors(f, total, 1 << 16)
        .map_err(|e| e.to_string())?
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
        .collect())
}

fn stability_comparison() -> Outcome {
    let start = Instant::now();
    let f2 = Field::Prime(2);
    let h = projective_space_hom_data(f2, 1, &[-2, -1], &[0]).map_err(|e| e.to_string())?;
    let mult = Multiplicities::new(&[1, 1], &[2]);
    let pol = Polarization::new(vec![rat(1, 3), rat(2, 3)], vec![rat(1, 2)], mult.clone()).map_err(|e| e.to_string())?;
    let (mut inside, mut semistable) = (0, 0);
    for w in every_point(f2, &h, &mult)? {
        if !in_w0_p(&h, &mult, 0, &w).map_err(|e| e.to_string())? {
            continue;
        }
        inside += 1;
        let rep = compare_stability(&w, &h, &pol, 0, &SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(rep.hypotheses.forward && rep.hypotheses.backward, || "hypotheses fail".into())?;
        ensure(rep.passed() && rep.verdicts_agree() == Some(true), || format!("exception at {:?}", w.blocks))?;
        semistable += usize::from(rep.verdict_w.semistable);
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{inside} points of W0_0, {semistable} semistable, zero exceptions"))
}

fn polarization_transport() -> Outcome {
    let q = Field::Rationals;
    let cases = [
        projective_space_hom_data(q, 2, &[-2, -1], &[0]),
        projective_space_hom_data(q, 1, &[-2, -1], &[0, 1]),
        projective_space_hom_data(q, 1, &[-3, -2, -1], &[0]),
        projective_space_hom_data(q, 2, &[-1], &[0, 1, 2]),
    ]
    .into_iter()
    .collect::<Result<Vec<_>, _>>()
    .map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let one = rat(1, 1);
    let mut done = 0;
    while done < 1000 {
        let h = &cases[rng.gen_range(0..cases.len())];
        let m: Vec<usize> = (0..h.r).map(|_| rng.gen_range(1..4)).collect();
        let n: Vec<usize> = (0..h.s).map(|_| rng.gen_range(1..4)).collect();
        let p = rng.gen_range(0..h.r);
        if n[0] >= (p..h.r).map(|j| m[j] * h.h[0][j]).sum::<usize>() {
            continue;
        }
        let normalize = |raw: Vec<u32>, d: &[usize]| -> Vec<BigRational> {
            let total: u32 = raw.iter().zip(d).map(|(x, &k)| x * k as u32).sum();
            raw.iter().map(|&x| rat(x as i64, total as i64)).collect()
        };
        let lambda = normalize((0..h.r).map(|_| rng.gen_range(1..9)).collect(), &m);
        let mu = normalize((0..h.s).map(|_| rng.gen_range(1..9)).collect(), &n);
        let pol = Polarization::new(lambda, mu, Multiplicities::new(&m, &n)).map_err(|e| e.to_string())?;
        let map = map_polarization(&pol, h, p).map_err(|e| e.to_string())?;
        ensure(map.polarization.source_total() == one && map.polarization.target_total() == one, || {
            format!("normalization fails for m={m:?} n={n:?} p={p}")
        })?;
        done += 1;
    }
    let pol = Polarization::new(vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2)], Multiplicities::new(&[1, 1], &[2]))
        .map_err(|e| e.to_string())?;
    let map = map_polarization(&pol, &cases[0], 0).map_err(|e| e.to_string())?;
    ensure(map.c == rat(7, 2), || format!("c = {}", map.c))?;
    ensure(map.polarization.lambda == vec![rat(1, 7)], || "alpha differs".into())?;
    ensure(map.polarization.mu == vec![rat(5, 7), rat(2, 7)], || "beta differs".into())?;
    Ok("1000 random inputs normalized exactly; alpha=(1/7), beta=(5/7,2/7), c=7/2".into())
}

fn constants_closed_forms() -> Outcome {
    let start = Instant::now();
    let q = Field::Rationals;
    for which in [Sigma::Zero, Sigma::One] {
        for n in 1..=3usize {
            ensure(c_branch(which, Branch::Growing, n, n + 1) == c_branch(which, Branch::Capped, n, n + 1), || {
                format!("{which:?} n={n}: branches differ at m = n+1")
            })?;
            for m in 1..=n + 1 {
                let t = TauMap::sigma(which, q, n);
                let k = rank_one_witness(&t, m).ok_or_else(|| format!("n={n} m={m}: no witness"))?;
                let closed = c_formula(which, n, m);
                ensure(delta(&t, &k, m).map_err(|e| e.to_string())? == closed, || format!("{which:?} n={n} m={m}: witness"))?;
                ensure(branch(n, m) == Branch::Growing, || format!("n={n} m={m}: branch"))?;
                let cfg = SearchConfig {
                    samples: 1000,
                    seed: (n * 10 + m) as u64,
                    reference: Some(closed),
                    ..SearchConfig::default()
                };
                let rep = c_tau_search(&t, m, &cfg).map_err(|e| e.to_string())?;
                ensure(rep.scanned >= 1000 && rep.exceeds_reference() == Some(false), || {
                    format!("{which:?} n={n} m={m}: scan exceeds the closed form")
                })?;
            }
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("witnesses exact, branches continuous, 18000 scanned subspaces in {:?}", start.elapsed()))
}

fn example_one() -> Outcome {
    for n in 1..=5usize {
        let ex = singular_values_ex1(n).map_err(|e| e.to_string())?;
        let expect: Vec<BigRational> = (1..=n + 1).map(|k| rat(k as i64, n as i64 + 2)).collect();
        ensure(ex.values == expect, || format!("n={n}: singular values"))?;
        ensure(ex.quotient_count == n, || format!("n={n}: {} quotients", ex.quotient_count))?;
        let d = HomDims::projective(n);
        let (dim_w, dim_g) = ((n + 2) * (d.h1 + d.h2), 2 + d.a + (n + 2) * (n + 2) - 1);
        ensure(ex.dim_generic == dim_w - dim_g, || format!("n={n}: generic dimension"))?;
        ensure(ex.dim_last == binomial(n + 2, 2) - 1, || format!("n={n}: last dimension"))?;
    }
    let ex = singular_values_ex1(2).map_err(|e| e.to_string())?;
    ensure(ex.values == vec![rat(1, 4), rat(1, 2), rat(3, 4)] && ex.dim_generic == 16 && ex.dim_last == 5, || {
        "n=2 values".into()
    })?;
    Ok("n=1..5: values k/(n+2), n quotients, both dimensions; n=2 gives {1/4,1/2,3/4}, 16, 5".into())
}

fn example_two() -> Outcome {
    let mut finding = vec![];
    for n in 1..=4usize {
        for k in 2..=6usize {
            let ex = singular_values_ex2(n, k).map_err(|e| e.to_string())?;
            ensure(ex.t_max.as_ref() == Some(&ex.t_max_formula), || format!("n={n} k={k}: maximum"))?;
            if n >= 2 {
                ensure(ex.strict_chain(), || format!("n={n} k={k}: chain"))?;
            } else if ex.t2 == ex.t_max_formula {
                finding.push(k);
            }
        }
    }
    ensure(finding.len() == 5, || "n=1 equality not observed for every k".into())?;
    Ok(format!("max = nk/(nk+1) for n<=4, 2<=k<=6; strict chain for n>=2; finding: t2 = t_max at n=1 for k in {finding:?}"))
}

fn coherence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    for i in 0..100 {
        let n = rng.gen_range(1..=4usize);
        let (m1, m2, n1) = (rng.gen_range(1..=6usize), rng.gen_range(1..=6usize), rng.gen_range(1..=12usize));
        let den = rng.gen_range(2..=40i64);
        let input = ThresholdInput::new(Some(n), m1, m2, n1, rat(rng.gen_range(1..den), den)).map_err(|e| e.to_string())?;
        for case in [Case::One, Case::Two] {
            let a = thm64_ok(&input, case).map_err(|e| e.to_string())?;
            let b = thm59_projective(&input, case).map_err(|e| e.to_string())?;
            ensure(a.ok() == b.ok(), || format!("grid point {i}: verdicts differ"))?;
        }
    }
    for n in 1..=5usize {
        let input = ThresholdInput::new(Some(n), 1, 1, n + 2, rat(1, 2)).map_err(|e| e.to_string())?;
        let rep = thm64_ok(&input, Case::Two).map_err(|e| e.to_string())?;
        ensure(rep.conditions[2].bound == Some(rat(n as i64 + 3, 2 * (n as i64 + 2))), || format!("n={n}: reduced bound"))?;
    }
    Ok("100 grid points agree; (n+3)/(2(n+2)) equals the case-2 third bound for n=1..5".into())
}

fn reproducibility() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_mutation-forge");
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    let runs: Vec<Vec<String>> = vec![
        vec!["--seed", "7", "constants", "--sigma", "0", "--n", "2", "--m", "2", "--samples", "200"],
        vec!["--format", "csv", "sweep", "--n", "2", "--m1", "1", "--m2", "2", "--n1", "5", "--steps", "12"],
        vec!["--seed", "3", "--verify", "mutate", "--input", &format!("{fixtures}/p1_morphism.json")],
        vec!["--field", "gf:2", "stability", "--input", &format!("{fixtures}/p1_stability.json")],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    for args in &runs {
        let once = || Command::new(bin).args(args).output().map_err(|e| e.to_string());
        let (a, b) = (once()?, once()?);
        ensure(a.status.success() && b.status.success(), || format!("{args:?} failed"))?;
        ensure(a.stdout == b.stdout, || format!("{args:?}: outputs differ"))?;
    }
    Ok(format!("{} configurations byte-identical across two runs", runs.len()))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("involution", involution),
        ("choice independence and equivariance", choice_and_equivariance),
        ("dual consistency", dual_consistency),
        ("Kronecker correspondence", kronecker_correspondence),
        ("stability comparison", stability_comparison),
        ("polarization transport", polarization_transport),
        ("constants", constants_closed_forms),
        ("first family singular values", example_one),
        ("second family maximum and chain", example_two),
        ("cross-theorem coherence", coherence),
        ("reproducibility", reproducibility),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
