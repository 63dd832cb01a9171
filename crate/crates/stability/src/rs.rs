//! Semistability of type-`(r,s)` morphisms under the reductive group and under the full group.

use std::collections::HashSet;

use exactfield::{BigRational, Field, Matrix, Subspace};
use num_traits::Zero;
use rayon::prelude::*;
use typers::{HomData, Multiplicities, Polarization, RsMorphism, SourceAut, TargetAut};

use crate::error::{Result, StabilityError};
use crate::kronecker::all_subspaces;
use crate::verdict::{StabilityVerdict, Witness};

/// Which group the verdict refers to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupMode {
    /// The reductive part `G_red`.
    Reductive,
    /// The full group `G`: `G_red` verdicts along the unipotent orbit `H·w`.
    Full,
}

/// How the target subspaces are chosen for each source family.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyMode {
    /// Only the smallest admissible `N'_l = Σ_i θ_li(H*_li ⊗ M'_i)`.
    Minimal,
    /// Every admissible `(N'_l)`.
    Exhaustive,
}

/// Search limits and family mode.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Family enumeration mode.
    pub family: FamilyMode,
    /// Maximum number of subspace families per point.
    pub budget_subspaces: u128,
    /// Maximum number of unipotent group elements.
    pub budget_orbit: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { family: FamilyMode::Minimal, budget_subspaces: 1_000_000, budget_orbit: 1_000_000 }
    }
}

fn field_order(field: Field) -> Result<u128> {
    field.order().map(u128::from).ok_or_else(|| StabilityError::NotFinite(field.to_string()))
}

fn product_count(counts: impl Iterator<Item = usize>, what: &str, budget: u128) -> Result<u128> {
    let mut total: u128 = 1;
    for c in counts {
        total = total.saturating_mul(c as u128);
        if total > budget {
            return Err(StabilityError::Budget { what: what.into(), needed: total, budget });
        }
    }
    Ok(total)
}

fn decode(mut idx: u128, radices: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; radices.len()];
    for k in (0..radices.len()).rev() {
        let r = radices[k] as u128;
        digits[k] = (idx % r) as usize;
        idx /= r;
    }
    digits
}

const BREAKS_SS: u8 = 1;
const BREAKS_S: u8 = 2;

struct FamilySearch<'a> {
    pol: &'a Polarization,
    h: &'a HomData,
    sources: Vec<Vec<Subspace>>,
    targets: Vec<Vec<Subspace>>,
    mode: FamilyMode,
    total: u128,
}

impl<'a> FamilySearch<'a> {
    fn new(h: &'a HomData, pol: &'a Polarization, opts: &SearchOptions) -> Result<FamilySearch<'a>> {
        let f = h.field;
        field_order(f)?;
        let mult = &pol.mult;
        let sources: Vec<Vec<Subspace>> =
            mult.m.iter().map(|&m| all_subspaces(f, m, opts.budget_subspaces)).collect::<Result<_>>()?;
        let targets: Vec<Vec<Subspace>> = match opts.family {
            FamilyMode::Minimal => vec![],
            FamilyMode::Exhaustive => {
                mult.n.iter().map(|&n| all_subspaces(f, n, opts.budget_subspaces)).collect::<Result<_>>()?
            }
        };
        let total = product_count(
            sources.iter().chain(targets.iter()).map(Vec::len),
            "subspace families",
            opts.budget_subspaces,
        )?;
        Ok(FamilySearch { pol, h, sources, targets, mode: opts.family, total })
    }

    fn radices(&self) -> Vec<usize> {
        self.sources.iter().chain(self.targets.iter()).map(Vec::len).collect()
    }

    fn family(&self, w: &RsMorphism, idx: u128) -> (Vec<Subspace>, Vec<Subspace>, bool) {
        let digits = decode(idx, &self.radices());
        let r = self.sources.len();
        let src: Vec<Subspace> = (0..r).map(|i| self.sources[i][digits[i]].clone()).collect();
        let minimal = minimal_targets(self.h, &self.pol.mult, w, &src);
        match self.mode {
            FamilyMode::Minimal => (src, minimal, true),
            FamilyMode::Exhaustive => {
                let tgt: Vec<Subspace> = (0..minimal.len()).map(|l| self.targets[l][digits[r + l]].clone()).collect();
                let admissible = tgt.iter().zip(&minimal).all(|(t, m)| t.contains_subspace(m));
                (src, tgt, admissible)
            }
        }
    }

    fn flags(&self, w: &RsMorphism, idx: u128) -> u8 {
        let (src, tgt, admissible) = self.family(w, idx);
        if !admissible {
            return 0;
        }
        let mult = &self.pol.mult;
        if tgt.iter().zip(&mult.n).all(|(t, &n)| t.dim() == n) {
            return 0;
        }
        let all_zero = src.iter().all(|s| s.dim() == 0) && tgt.iter().all(|t| t.dim() == 0);
        let m_sub: Vec<usize> = src.iter().map(Subspace::dim).collect();
        let n_sub: Vec<usize> = tgt.iter().map(Subspace::dim).collect();
        let diff: BigRational = self.pol.difference(&m_sub, &n_sub);
        let mut out = 0;
        if diff > BigRational::zero() {
            out |= BREAKS_SS;
        }
        if diff >= BigRational::zero() && !all_zero {
            out |= BREAKS_S;
        }
        out
    }

    fn verdict(&self, w: &RsMorphism, strict: bool, orbit_index: usize) -> StabilityVerdict {
        let flags: Vec<u8> = (0..self.total as u64).into_par_iter().map(|i| self.flags(w, i as u128)).collect();
        let semistable = flags.iter().all(|f| f & BREAKS_SS == 0);
        let stable = flags.iter().all(|f| f & BREAKS_S == 0);
        let want = if strict { BREAKS_S } else { BREAKS_SS };
        let witness = flags.iter().position(|f| f & want != 0).map(|i| {
            let (sources, targets, _) = self.family(w, i as u128);
            Witness { sources, targets, orbit_index }
        });
        StabilityVerdict { semistable, stable, witness }
    }
}

/// `Σ_i θ_li(H*_li ⊗ M'_i)` for every target `l`.
pub fn minimal_targets(h: &HomData, mult: &Multiplicities, w: &RsMorphism, sources: &[Subspace]) -> Vec<Subspace> {
    let f = h.field;
    (0..h.s)
        .map(|l| {
            let parts: Vec<Matrix> = (0..h.r)
                .map(|i| &w.blocks[l][i] * &Matrix::identity(f, h.h[l][i]).kron(sources[i].basis()))
                .collect();
            Subspace::span(&Matrix::hcat(f, mult.n[l], &parts))
        })
        .collect()
}

/// Every element of the unipotent group `H`, in a fixed order.
pub fn unipotent_elements(h: &HomData, mult: &Multiplicities, budget: u128) -> Result<Vec<(SourceAut, TargetAut)>> {
    let f = h.field;
    let q = field_order(f)?;
    let mut slots: Vec<(bool, usize, usize, usize, usize)> = vec![];
    for j in 0..h.r {
        for i in 0..j {
            slots.push((true, j, i, mult.m[j], h.a[j][i] * mult.m[i]));
        }
    }
    for m in 0..h.s {
        for l in 0..m {
            slots.push((false, m, l, mult.n[m], h.b[m][l] * mult.n[l]));
        }
    }
    let params: usize = slots.iter().map(|s| s.3 * s.4).sum();
    let needed = q.checked_pow(params as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(StabilityError::Budget { what: "unipotent elements".into(), needed, budget });
    }
    let radices = vec![q as usize; params];
    let elements = f.elements().expect("prime field");
    Ok((0..needed)
        .map(|idx| {
            let digits = decode(idx, &radices);
            let mut g = SourceAut::identity(h, mult);
            let mut t = TargetAut::identity(h, mult);
            let mut pos = 0;
            for &(is_source, a, b, rows, cols) in &slots {
                let blk = Matrix::from_fn(f, rows, cols, |x, y| elements[digits[pos + x * cols + y]].clone());
                pos += rows * cols;
                if is_source {
                    g.blocks[a][b] = blk;
                } else {
                    t.blocks[a][b] = blk;
                }
            }
            (g, t)
        })
        .collect())
}

/// The distinct points of `H·w` with the index of the first group element reaching each.
pub fn unipotent_orbit(h: &HomData, mult: &Multiplicities, w: &RsMorphism, budget: u128) -> Result<Vec<(usize, RsMorphism)>> {
    let points: Vec<RsMorphism> =
        unipotent_elements(h, mult, budget)?.par_iter().map(|(g, t)| w.act(h, mult, g, t)).collect();
    let mut seen = HashSet::new();
    Ok(points.into_iter().enumerate().filter(|(_, p)| seen.insert(p.clone())).collect())
}

/// Decides (semi)stability of `w` relative to `pol` over a prime field.
///
/// A family is tested when at least one `N'_l` is proper; strict queries also skip the
/// family where every subspace is zero.
pub fn is_semistable_rs(
    w: &RsMorphism,
    h: &HomData,
    pol: &Polarization,
    group: GroupMode,
    strict: bool,
    opts: &SearchOptions,
) -> Result<StabilityVerdict> {
    w.check(h, &pol.mult)?;
    if pol.lambda.len() != h.r || pol.mu.len() != h.s {
        return Err(StabilityError::Dimension("polarization does not match the type".into()));
    }
    let search = FamilySearch::new(h, pol, opts)?;
    match group {
        GroupMode::Reductive => Ok(search.verdict(w, strict, 0)),
        GroupMode::Full => {
            let orbit = unipotent_orbit(h, &pol.mult, w, opts.budget_orbit)?;
            let verdicts: Vec<StabilityVerdict> =
                orbit.par_iter().map(|(idx, p)| search.verdict(p, strict, *idx)).collect();
            let semistable = verdicts.iter().all(|v| v.semistable);
            let stable = verdicts.iter().all(|v| v.stable);
            let witness = verdicts.into_iter().find_map(|v| if v.holds(strict) { None } else { v.witness });
            Ok(StabilityVerdict { semistable, stable, witness })
        }
    }
}
