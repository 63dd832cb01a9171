//! Lower bounds and scans for `c_τ(m)`.

use exactfield::{format_rational, total_subspace_count, BigRational, Field, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use typers::HomData;

use crate::delta::{delta_unchecked, is_generic, rank_one_witness};
use crate::error::{ConstantError, Result};
use crate::tau::TauMap;

/// Scan parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Number of random subspaces drawn when no exhaustive scan runs.
    pub samples: usize,
    /// Seed of the random scan.
    pub seed: u64,
    /// Prime over which an exhaustive scan is attempted.
    pub exhaustive_prime: Option<u32>,
    /// Largest number of subspaces an exhaustive scan may visit.
    pub exhaustive_budget: u128,
    /// Value the scan maximum is compared against.
    pub reference: Option<BigRational>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { samples: 1000, seed: 0, exhaustive_prime: None, exhaustive_budget: 100_000, reference: None }
    }
}

/// How the scan maximum was obtained.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// Every subspace over the stated prime field.
    Exhaustive,
    /// Seeded random subspaces over the map's own field.
    Random,
}

/// Outcome of a search for `c_τ(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    /// `dim M`.
    pub m: usize,
    /// `δ` of the line spanned by a length-`m` tensor, when `m ≤ dim H`.
    pub witness_value: Option<BigRational>,
    /// Largest `δ` among scanned generic subspaces (`None` when none was generic).
    pub max_found: Option<BigRational>,
    /// Echelon basis of the first subspace attaining `max_found`.
    pub max_subspace: Option<Matrix>,
    /// Scan mode.
    pub mode: ScanMode,
    /// Field of the scan.
    pub scan_field: Field,
    /// Number of subspaces examined.
    pub scanned: usize,
    /// Number of generic subspaces among them.
    pub generic: usize,
    /// Seed of the random scan.
    pub seed: u64,
    /// Reference value, if supplied.
    pub reference: Option<BigRational>,
    /// Whether no generic subspace exists or was found; the supremum is then read as zero.
    pub empty_family: bool,
}

impl SearchReport {
    /// The best certified lower bound among the witness and the scan.
    pub fn lower_bound(&self) -> BigRational {
        let zero = BigRational::from_integer(0.into());
        [self.witness_value.clone(), self.max_found.clone()].into_iter().flatten().fold(zero, |a, b| a.max(b))
    }

    /// Whether some scanned value exceeds the reference.
    pub fn exceeds_reference(&self) -> Option<bool> {
        self.reference.as_ref().map(|r| self.max_found.as_ref().is_some_and(|x| x > r))
    }

    /// Whether the witness value equals the reference.
    pub fn witness_attains_reference(&self) -> Option<bool> {
        self.reference.as_ref().map(|r| self.witness_value.as_ref() == Some(r))
    }

    /// Serializable form with rationals as `num/den` strings.
    pub fn to_doc(&self) -> SearchDoc {
        let s = |x: &Option<BigRational>| x.as_ref().map(format_rational);
        SearchDoc {
            m: self.m,
            witness_value: s(&self.witness_value),
            max_found: s(&self.max_found),
            mode: self.mode,
            scan_field: self.scan_field.to_string(),
            scanned: self.scanned,
            generic: self.generic,
            seed: self.seed,
            reference: s(&self.reference),
            exceeds_reference: self.exceeds_reference(),
            witness_attains_reference: self.witness_attains_reference(),
            empty_family: self.empty_family,
        }
    }
}

/// JSON form of a [`SearchReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDoc {
    /// `dim M`.
    pub m: usize,
    /// Witness value.
    pub witness_value: Option<String>,
    /// Scan maximum.
    pub max_found: Option<String>,
    /// Scan mode.
    pub mode: ScanMode,
    /// Field of the scan.
    pub scan_field: String,
    /// Subspaces examined.
    pub scanned: usize,
    /// Generic subspaces examined.
    pub generic: usize,
    /// Seed.
    pub seed: u64,
    /// Reference value.
    pub reference: Option<String>,
    /// Whether the scan maximum exceeds the reference.
    pub exceeds_reference: Option<bool>,
    /// Whether the witness equals the reference.
    pub witness_attains_reference: Option<bool>,
    /// Whether the generic family was empty.
    pub empty_family: bool,
}

fn best(values: Vec<Option<BigRational>>) -> (Option<BigRational>, Option<usize>, usize) {
    let generic = values.iter().filter(|v| v.is_some()).count();
    let mut top: Option<(BigRational, usize)> = None;
    for (i, v) in values.into_iter().enumerate() {
        if let Some(x) = v {
            if top.as_ref().map_or(true, |(t, _)| &x > t) {
                top = Some((x, i));
            }
        }
    }
    match top {
        Some((x, i)) => (Some(x), Some(i), generic),
        None => (None, None, generic),
    }
}

fn evaluate(t: &TauMap, tau_m: &Matrix, k: &Subspace, m: usize) -> Option<BigRational> {
    if k.dim() == 0 || k.dim() == t.h * m {
        return None;
    }
    is_generic(k, t.h, m).ok()?.then(|| delta_unchecked(t, tau_m, k, m))
}

/// A seeded random subspace of `H ⊗ M` with entries in `{-1, 0, 1}`.
pub fn random_subspace(field: Field, ambient: usize, seed: u64, index: u64) -> Subspace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let d = rng.gen_range(1..ambient.max(2));
    Subspace::span(&Matrix::from_fn(field, ambient, d, |_, _| field.from_i64(rng.gen_range(-1..=1))))
}

/// Bounds `c_τ(m)` from below by the length-`m` witness and a scan of generic subspaces.
pub fn c_tau_search(t: &TauMap, m: usize, cfg: &SearchConfig) -> Result<SearchReport> {
    if m == 0 {
        return Err(ConstantError::Dimension("dim M must be positive".into()));
    }
    let witness_value = rank_one_witness(t, m).map(|k| delta_unchecked(t, &t.tau_m(m), &k, m));
    let ambient = t.h * m;
    let exhaustive = cfg
        .exhaustive_prime
        .filter(|&p| total_subspace_count(p, ambient) <= cfg.exhaustive_budget)
        .map(Field::Prime);
    let (mode, scan_field, subspaces): (ScanMode, Field, Vec<Subspace>) = if let Some(field) = exhaustive {
        let mut all = vec![];
        for d in 1..ambient {
            all.extend(exactfield::enumerate_subspaces(field, ambient, d, cfg.exhaustive_budget)?);
        }
        (ScanMode::Exhaustive, field, all)
    } else {
        if cfg.samples == 0 && ambient > 0 {
            return Err(ConstantError::NoScan("exhaustive scan over budget and no samples requested".into()));
        }
        let field = t.field();
        let subs =
            if ambient < 2 { vec![] } else { (0..cfg.samples as u64).map(|i| random_subspace(field, ambient, cfg.seed, i)).collect() };
        (ScanMode::Random, field, subs)
    };
    let scan_tau = if scan_field == t.field() { t.clone() } else { t.over(scan_field)? };
    let tau_m = scan_tau.tau_m(m);
    let values: Vec<Option<BigRational>> = subspaces.par_iter().map(|k| evaluate(&scan_tau, &tau_m, k, m)).collect();
    let (max_found, idx, generic) = best(values);
    Ok(SearchReport {
        m,
        empty_family: max_found.is_none() && witness_value.is_none(),
        witness_value,
        max_found,
        max_subspace: idx.map(|i| subspaces[i].basis().clone()),
        mode,
        scan_field,
        scanned: subspaces.len(),
        generic,
        seed: cfg.seed,
        reference: cfg.reference.clone(),
    })
}

/// The search applied to the map `H11* ⊗ A21 → H12*` of type-(2,1) data, with `M = k^m2`.
pub fn c_tau_rs(h: &HomData, m2: usize, cfg: &SearchConfig) -> Result<SearchReport> {
    let t = TauMap::from_hom_data(h)?;
    c_tau_search(&t, m2, cfg)
}
