//! One function per subcommand.

use constants::{branch, c_formula, c_tau_search, SearchConfig, Sigma, TauMap};
use exactfield::{all_vectors, format_rational, parse_rational, Field, Matrix};
use mutation::{
    build_dual, chart_splitting, choice_after_alpha0, choice_after_beta, choice_change_element, decompose, default_choice,
    double_mutation, generator_transport, mutate, mutate_chart, DoubleDual, DualSpace, Generator,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use stability::{compare_stability, is_semistable_rs, ComparisonReport, FamilyMode, GroupMode, SearchOptions, StabilityVerdict};
use theta::random::{random_chart_for, random_left_element, random_right_element};
use theta::{in_w0, MorphismPoint, PairElement, ThetaSpace, ValidationReport};
use thresholds::{
    singular_values_ex1, singular_values_ex2, sweep, thm59_projective, thm64_ok, write_csv, Case, SweepSpec, ThresholdInput,
};
use typers::{
    build_theta_p, build_theta_p_with_layout, dual_point_to_rs, in_w0_p, map_polarization, mutated_hom_data,
    mutated_multiplicities, projective_space_ext_warnings, rs_to_point, HomData, Multiplicities, RsMorphism,
};

use crate::cli::{CaseArg, Command, GroupArg, RunConfig, ShapeArgs};
use crate::error::{CliError, Result};
use crate::input::{morphism_doc, Problem};

/// What a subcommand produced.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    /// Whether every mathematical check passed.
    pub passed: bool,
    /// JSON result body.
    pub result: Value,
    /// CSV table, for commands producing one.
    pub table: Option<String>,
}

impl Outcome {
    fn json(passed: bool, result: Value) -> Outcome {
        Outcome { passed, result, table: None }
    }
}

/// Parses the `--field` setting.
pub fn field_of(cfg: &RunConfig) -> Result<Field> {
    cfg.field.parse().map_err(|e: exactfield::ExactError| CliError::Usage(e.to_string()))
}

fn options(cfg: &RunConfig) -> SearchOptions {
    SearchOptions {
        family: FamilyMode::Minimal,
        budget_subspaces: cfg.budget_subspaces.into(),
        budget_orbit: cfg.budget_orbit.into(),
    }
}

fn checks_doc(rep: &ValidationReport) -> Value {
    json!(rep.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>())
}

fn check(name: &str, passed: bool) -> Value {
    json!({"name": name, "passed": passed})
}

fn all_passed(v: &[Value]) -> bool {
    v.iter().all(|c| c["passed"] == json!(true))
}

fn rationals(v: &[exactfield::BigRational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// Dispatches a subcommand.
pub fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    field_of(cfg)?;
    match cmd {
        Command::Validate { input } => validate(&Problem::load(input)?, cfg),
        Command::Mutate { input } => mutate_cmd(&Problem::load(input)?, cfg),
        Command::Dual { input } => dual_cmd(&Problem::load(input)?, cfg),
        Command::Stability { input, group } => stability_cmd(&Problem::load(input)?, cfg, *group),
        Command::Polarization { input } => polarization_cmd(&Problem::load(input)?, cfg),
        Command::Constants { sigma, n, m, samples, exhaustive_prime } => {
            constants_cmd(cfg, *sigma, *n, *m, *samples, *exhaustive_prime)
        }
        Command::Thresholds { shape, t, case } => thresholds_cmd(shape, t, *case),
        Command::Singular { n, k } => singular_cmd(*n, *k),
        Command::Sweep { shape, steps, case } => sweep_cmd(shape, *steps, *case),
    }
}

fn validate(pb: &Problem, cfg: &RunConfig) -> Result<Outcome> {
    if let Some(t) = pb.theta_space()? {
        let rep = t.validate();
        let mut out = json!({"kind": "theta", "dims": t.dims, "checks": checks_doc(&rep)});
        let mut passed = rep.passed();
        if cfg.verify && passed {
            let dual = build_dual(&t)?;
            let drep = dual.theta.validate();
            passed &= drep.passed();
            out["dual_checks"] = checks_doc(&drep);
        }
        return Ok(Outcome::json(passed, out));
    }
    let field = field_of(cfg)?;
    let h = pb.require_hom(field)?;
    let mut checks: Vec<Value> = h
        .associativity_checks()
        .into_iter()
        .map(|(name, ok)| json!({"name": name, "passed": ok}))
        .collect();
    checks.push(json!({"name": "hom data", "passed": h.validate().is_ok(), "detail": h.validate().err().map(|e| e.to_string())}));
    let warnings = pb.projective.as_ref().map(|ps| projective_space_ext_warnings(ps.n, &ps.e, &ps.f)).unwrap_or_default();
    let mut spaces = vec![];
    if pb.m.is_some() || pb.n.is_some() {
        let mult = pb.multiplicities()?;
        let ps: Vec<usize> = match pb.p {
            Some(p) => vec![p],
            None => (0..h.r).collect(),
        };
        for p in ps {
            match build_theta_p(&h, &mult, p) {
                Ok(t) => {
                    let rep = t.validate();
                    checks.push(json!({"name": format!("theta_{p}"), "passed": rep.passed()}));
                    spaces.push(json!({"p": p, "dims": t.dims, "checks": checks_doc(&rep)}));
                }
                Err(e) => spaces.push(json!({"p": p, "skipped": e.to_string()})),
            }
        }
    }
    let passed = all_passed(&checks);
    Ok(Outcome::json(
        passed,
        json!({"kind": "hom", "r": h.r, "s": h.s, "checks": checks, "warnings": warnings, "theta_p": spaces}),
    ))
}

fn space_from(pb: &Problem, cfg: &RunConfig) -> Result<ThetaSpace> {
    if let Some(t) = pb.theta_space()? {
        return Ok(t);
    }
    let h = pb.require_hom(field_of(cfg)?)?;
    Ok(build_theta_p(&h, &pb.multiplicities()?, pb.split()?)?)
}

fn dual_cmd(pb: &Problem, cfg: &RunConfig) -> Result<Outcome> {
    let t = space_from(pb, cfg)?;
    let dd = DoubleDual::new(&t)?;
    let rep = dd.report(&t);
    let drep = dd.first.theta.validate();
    let identifications = vec![
        check("dims", rep.dims),
        check("rho1", rep.rho1),
        check("rho2", rep.rho2),
        check("nu", rep.nu),
        check("mu", rep.mu),
    ];
    Ok(Outcome::json(
        rep.passed() && drep.passed(),
        json!({
            "dims": t.dims,
            "dual": dd.first.theta.to_doc(),
            "dual_checks": checks_doc(&drep),
            "double_dual": identifications,
            "iota": dd.iota.to_doc(),
            "j": dd.j.to_doc(),
        }),
    ))
}

fn verify_mutation(t: &ThetaSpace, dual: &DualSpace, w: &MorphismPoint, z: &MorphismPoint, seed: u64) -> Result<Vec<Value>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = default_choice(t, w)?;
    let dd = DoubleDual::new(t)?;
    let (back, expected) = double_mutation(&dd, t, w, &c)?;
    let mut checks = vec![check("involution", back == expected)];

    let ch = random_chart_for(t, w, &mut rng);
    let c2 = chart_splitting(t, &ch, w)?.choice;
    let z2 = mutate(dual, t, w, &c2)?;
    let g = choice_change_element(dual, &c, &c2)?;
    checks.push(check("choice independence", g.validate(&dual.theta).is_ok() && &g.act(&dual.theta, z) == &z2));

    let right = random_right_element(t, &mut rng);
    let wa = Generator::Alpha0(right.alpha0.clone()).act(t, w);
    checks.push(check("alpha0 invariance", &mutate(dual, t, &wa, &choice_after_alpha0(t, &c, &right.alpha0))? == z));
    let left = random_left_element(t, &mut rng);
    let wb = Generator::Beta(left.beta.clone()).act(t, w);
    checks.push(check("beta invariance", &mutate(dual, t, &wb, &choice_after_beta(w, &c, &left.beta))? == z));

    let g = PairElement { right: random_right_element(t, &mut rng), left: random_left_element(t, &mut rng) };
    let ch0 = random_chart_for(t, w, &mut rng);
    let mut transported = true;
    for gen in decompose(t, &g)? {
        let gw = gen.act(t, w);
        let ch1 = if matches!(gen, Generator::B(_)) { random_chart_for(t, &gw, &mut rng) } else { ch0.clone() };
        let gamma = generator_transport(dual, t, &gen, w, &ch0, &ch1)?;
        let z0 = mutate_chart(dual, t, &ch0, w)?;
        let z1 = mutate_chart(dual, t, &ch1, &gw)?;
        transported &= gamma.act(&dual.theta, &z0) == z1;
    }
    checks.push(check("generator transport", transported));
    Ok(checks)
}

fn mutate_cmd(pb: &Problem, cfg: &RunConfig) -> Result<Outcome> {
    let (t, w, rs) = if let Some(t) = pb.theta_space()? {
        let w = pb.theta_point(&t)?;
        (t, w, None)
    } else {
        let h = pb.require_hom(field_of(cfg)?)?;
        let mult = pb.multiplicities()?;
        let p = pb.split()?;
        let w = pb
            .rs_morphism(&h, &mult)?
            .ok_or_else(|| CliError::Usage("the problem needs a point or a morphism".into()))?;
        let (t, lay) = build_theta_p_with_layout(&h, &mult, p)?;
        let point = rs_to_point(&h, &mult, &lay, &w)?;
        (t, point, Some((h, mult, lay, p)))
    };
    if !in_w0(&w) {
        return Err(CliError::Failure(format!(
            "the point lies outside W0: psi2_bar has rank deficit {}",
            w.w0_deficit()
        )));
    }
    let dual = build_dual(&t)?;
    let c = default_choice(&t, &w)?;
    let z = mutate(&dual, &t, &w, &c)?;
    let mut out = json!({
        "dims": t.dims,
        "dual_dims": dual.theta.dims,
        "mutated": z.to_doc(),
        "choice": {"u": c.u.to_doc(), "v": c.v.to_doc(), "kernel": c.kernel.to_doc()},
    });
    if let Some((h, mult, lay, p)) = rs {
        let mh = mutated_hom_data(&h, p)?;
        let mm = mutated_multiplicities(&h, &mult, p)?;
        let zr = dual_point_to_rs(&h, &mult, &lay, &dual, &mh, &z)?;
        out["mutated_type"] = json!([mh.data.r, mh.data.s]);
        out["mutated_multiplicities"] = json!({"m": mm.m, "n": mm.n});
        out["mutated_morphism"] = json!(morphism_doc(&zr));
    }
    let mut passed = true;
    if cfg.verify {
        let checks = verify_mutation(&t, &dual, &w, &z, cfg.seed)?;
        passed = all_passed(&checks);
        out["verify"] = json!(checks);
    }
    Ok(Outcome::json(passed, out))
}

fn verdict_doc(v: &StabilityVerdict) -> Value {
    json!({
        "semistable": v.semistable,
        "stable": v.stable,
        "witness": v.witness.as_ref().map(|w| serde_json::to_value(w.to_doc()).expect("witness serializes")),
    })
}

fn comparison_doc(r: &ComparisonReport) -> Value {
    json!({
        "p": r.p,
        "in_w0": r.in_w0,
        "verdict_w": verdict_doc(&r.verdict_w),
        "verdict_z": r.verdict_z.as_ref().map(verdict_doc),
        "mapped": {
            "lambda": rationals(&r.mapped.polarization.lambda),
            "mu": rationals(&r.mapped.polarization.mu),
            "positive": r.mapped.is_positive(),
        },
        "hypotheses": {
            "forward": r.hypotheses.forward,
            "backward": r.hypotheses.backward,
            "open_set": r.hypotheses.open_set,
            "mapped_positive": r.hypotheses.mapped_positive,
        },
        "implications": r.implications.iter().map(|i| json!({"name": i.name, "asserted": i.asserted, "holds": i.holds})).collect::<Vec<_>>(),
    })
}

fn every_morphism(h: &HomData, mult: &Multiplicities, budget: u64) -> Result<Vec<RsMorphism>> {
    let zero = RsMorphism::zero(h, mult);
    let total: usize = zero.blocks.iter().flatten().map(|b| b.rows() * b.cols()).sum();
    let vectors = all_vectors(h.field, total, budget.into())?;
    Ok(vectors
        .into_iter()
        .map(|v| {
            let mut w = zero.clone();
            let mut pos = 0;
            for blk in w.blocks.iter_mut().flatten() {
                let (r, c) = blk.shape();
                *blk = Matrix::from_fn(h.field, r, c, |x, y| v.get(pos + x * c + y, 0).clone());
                pos += r * c;
            }
            w
        })
        .collect())
}

fn stability_cmd(pb: &Problem, cfg: &RunConfig, group: GroupArg) -> Result<Outcome> {
    let field = field_of(cfg)?;
    if field.order().is_none() {
        return Err(CliError::Usage("stability needs a prime field, e.g. --field gf:2".into()));
    }
    let h = pb.require_hom(field)?;
    let pol = pb.polarization()?;
    let opts = options(cfg);
    let mode = match group {
        GroupArg::Reductive => GroupMode::Reductive,
        GroupArg::Full => GroupMode::Full,
    };
    if let Some(w) = pb.rs_morphism(&h, &pol.mult)? {
        let v = is_semistable_rs(&w, &h, &pol, mode, true, &opts)?;
        let mut out = json!({"mode": "point", "verdict": verdict_doc(&v)});
        let mut passed = true;
        if let Some(p) = pb.p {
            let rep = compare_stability(&w, &h, &pol, p, &opts)?;
            passed = rep.passed();
            out["comparison"] = comparison_doc(&rep);
        }
        return Ok(Outcome::json(passed, out));
    }
    let points = every_morphism(&h, &pol.mult, cfg.budget_subspaces)?;
    let (mut semistable, mut stable) = (0usize, 0usize);
    for w in &points {
        let v = is_semistable_rs(w, &h, &pol, mode, true, &opts)?;
        semistable += usize::from(v.semistable);
        stable += usize::from(v.stable);
    }
    let mut out = json!({"mode": "exhaustive", "points": points.len(), "semistable": semistable, "stable": stable});
    let mut passed = true;
    if let Some(p) = pb.p {
        let (mut inside, mut agree, mut exceptions) = (0usize, 0usize, 0usize);
        for w in &points {
            if !in_w0_p(&h, &pol.mult, p, w)? {
                continue;
            }
            inside += 1;
            let rep = compare_stability(w, &h, &pol, p, &opts)?;
            agree += usize::from(rep.verdicts_agree() == Some(true));
            exceptions += usize::from(!rep.passed());
        }
        passed = exceptions == 0;
        out["comparison"] = json!({"p": p, "in_w0": inside, "verdicts_agree": agree, "exceptions": exceptions});
    }
    Ok(Outcome::json(passed, out))
}

fn polarization_cmd(pb: &Problem, cfg: &RunConfig) -> Result<Outcome> {
    let h = pb.require_hom(field_of(cfg)?)?;
    let pol = pb.polarization()?;
    let p = pb.split()?;
    let map = map_polarization(&pol, &h, p)?;
    let np = &map.polarization;
    let one = parse_rational("1").expect("literal");
    let identities = vec![
        check("sum lambda m = 1", pol.source_total() == one && np.source_total() == one),
        check("sum mu n = 1", pol.target_total() == one && np.target_total() == one),
        check("positive weights", map.is_positive()),
    ];
    let passed = all_passed(&identities);
    Ok(Outcome::json(
        passed,
        json!({
            "p": p,
            "alpha_raw": rationals(&map.alpha_raw),
            "beta_raw": rationals(&map.beta_raw),
            "c": format_rational(&map.c),
            "mapped": serde_json::to_value(np.to_doc()).expect("polarization serializes"),
            "violations": map.violations,
            "checks": identities,
        }),
    ))
}

fn constants_cmd(cfg: &RunConfig, sigma: u8, n: usize, m: usize, samples: usize, prime: Option<u32>) -> Result<Outcome> {
    let which = if sigma == 0 { Sigma::Zero } else { Sigma::One };
    let field = field_of(cfg)?;
    let tau = TauMap::sigma(which, field, n);
    let closed = c_formula(which, n, m);
    let search = SearchConfig {
        samples,
        seed: cfg.seed,
        exhaustive_prime: prime,
        exhaustive_budget: cfg.budget_subspaces.into(),
        reference: Some(closed.clone()),
    };
    let rep = c_tau_search(&tau, m, &search)?;
    let passed = rep.exceeds_reference() != Some(true);
    Ok(Outcome::json(
        passed,
        json!({
            "sigma": sigma,
            "n": n,
            "m": m,
            "branch": format!("{:?}", branch(n, m)).to_lowercase(),
            "closed_form": format_rational(&closed),
            "search": serde_json::to_value(rep.to_doc()).expect("report serializes"),
        }),
    ))
}

fn cases(case: CaseArg) -> Vec<Case> {
    match case {
        CaseArg::One => vec![Case::One],
        CaseArg::Two => vec![Case::Two],
        CaseArg::Both => vec![Case::One, Case::Two],
    }
}

fn thresholds_cmd(shape: &ShapeArgs, t: &str, case: CaseArg) -> Result<Outcome> {
    let t = parse_rational(t).map_err(|e| CliError::Usage(e.to_string()))?;
    let input = ThresholdInput::new(Some(shape.n), shape.m1, shape.m2, shape.n1, t.clone())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut reports = vec![];
    let mut consistent = true;
    for c in cases(case) {
        let a = thm64_ok(&input, c)?;
        let b = thm59_projective(&input, c)?;
        consistent &= a.ok() == b.ok();
        reports.push(json!({
            "case": if c == Case::One { 1 } else { 2 },
            "projective": serde_json::to_value(a.to_doc()).expect("report serializes"),
            "general": serde_json::to_value(b.to_doc()).expect("report serializes"),
        }));
    }
    Ok(Outcome::json(
        consistent,
        json!({"t": format_rational(&t), "eta1": format_rational(&input.eta1()), "eta2": format_rational(&input.eta2()), "reports": reports, "consistent": consistent}),
    ))
}

fn singular_cmd(n: usize, k: Option<usize>) -> Result<Outcome> {
    match k {
        None => {
            let ex = singular_values_ex1(n).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Outcome::json(
                true,
                json!({
                    "family": 1,
                    "n": n,
                    "values": rationals(&ex.values),
                    "window_low": format_rational(&ex.window_low),
                    "empty_threshold": format_rational(&ex.empty_threshold),
                    "quotient_count": ex.quotient_count,
                    "dim_generic": ex.dim_generic,
                    "dim_last": ex.dim_last,
                }),
            ))
        }
        Some(k) => {
            let ex = singular_values_ex2(n, k).map_err(|e| CliError::Usage(e.to_string()))?;
            let matches = ex.t_max.as_ref() == Some(&ex.t_max_formula);
            Ok(Outcome::json(
                matches,
                json!({
                    "family": 2,
                    "n": n,
                    "k": k,
                    "values": rationals(&ex.values),
                    "t_max": ex.t_max.as_ref().map(format_rational),
                    "t_max_formula": format_rational(&ex.t_max_formula),
                    "t1": format_rational(&ex.t1),
                    "t2": format_rational(&ex.t2),
                    "strict_chain": ex.strict_chain(),
                }),
            ))
        }
    }
}

fn sweep_cmd(shape: &ShapeArgs, steps: usize, case: CaseArg) -> Result<Outcome> {
    let plan = SweepSpec { n: shape.n, m1: shape.m1, m2: shape.m2, n1: shape.n1, steps, cases: cases(case) };
    let rows = sweep(&plan).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    let table = String::from_utf8(buf).expect("csv output is utf-8");
    Ok(Outcome {
        passed: true,
        result: json!({"rows": serde_json::to_value(&rows).expect("rows serialize")}),
        table: Some(table),
    })
}
