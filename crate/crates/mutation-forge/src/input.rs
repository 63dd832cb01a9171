//! The JSON problem file shared by the file-driven subcommands.

use std::path::Path;

use exactfield::{parse_rational, Field, MatrixDoc};
use serde::{Deserialize, Serialize};
use theta::{MorphismPoint, PointDoc, ThetaDoc, ThetaSpace};
use typers::{projective_space_hom_data, HomData, HomDoc, Multiplicities, Polarization, RsMorphism};

use crate::error::{CliError, Result};

/// Degrees `e`, `f` of line bundles on `P^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectiveSpec {
    /// Dimension of the projective space.
    pub n: usize,
    /// Source degrees, strictly increasing.
    pub e: Vec<i64>,
    /// Target degrees, strictly increasing.
    pub f: Vec<i64>,
}

/// Every field is optional; each subcommand states which ones it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    /// An abstract morphism space.
    pub theta: Option<ThetaDoc>,
    /// A point of `theta`.
    pub point: Option<PointDoc>,
    /// Explicit composition data.
    pub hom: Option<HomDoc>,
    /// Composition data of line bundles on `P^n`, over the `--field` field.
    pub projective: Option<ProjectiveSpec>,
    /// Source multiplicities.
    pub m: Option<Vec<usize>>,
    /// Target multiplicities.
    pub n: Option<Vec<usize>>,
    /// Splitting index.
    pub p: Option<usize>,
    /// Source weights as exact strings.
    pub lambda: Option<Vec<String>>,
    /// Target weights as exact strings.
    pub mu: Option<Vec<String>>,
    /// Blocks `θ_li` of a morphism, indexed `[l][i]`.
    pub morphism: Option<Vec<Vec<MatrixDoc>>>,
}

impl Problem {
    /// Reads and decodes a problem file.
    pub fn load(path: &Path) -> Result<Problem> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    /// The abstract space, if given.
    pub fn theta_space(&self) -> Result<Option<ThetaSpace>> {
        self.theta.as_ref().map(ThetaSpace::from_doc).transpose().map_err(Into::into)
    }

    /// The point of the abstract space.
    pub fn theta_point(&self, t: &ThetaSpace) -> Result<MorphismPoint> {
        let doc = self.point.as_ref().ok_or_else(|| CliError::Usage("the problem has no point".into()))?;
        Ok(MorphismPoint::from_doc(t, doc)?)
    }

    /// Composition data from `hom` or `projective`.
    pub fn hom_data(&self, field: Field) -> Result<Option<HomData>> {
        match (&self.hom, &self.projective) {
            (Some(_), Some(_)) => Err(CliError::Usage("give either hom or projective, not both".into())),
            (Some(doc), None) => HomData::from_doc(doc).map(Some).map_err(|e| CliError::Parse(e.to_string())),
            (None, Some(ps)) => projective_space_hom_data(field, ps.n, &ps.e, &ps.f)
                .map(Some)
                .map_err(|e| CliError::Parse(e.to_string())),
            (None, None) => Ok(None),
        }
    }

    /// Composition data, required.
    pub fn require_hom(&self, field: Field) -> Result<HomData> {
        self.hom_data(field)?.ok_or_else(|| CliError::Usage("the problem needs hom or projective data".into()))
    }

    /// Multiplicities, required.
    pub fn multiplicities(&self) -> Result<Multiplicities> {
        match (&self.m, &self.n) {
            (Some(m), Some(n)) => Ok(Multiplicities::new(m, n)),
            _ => Err(CliError::Usage("the problem needs multiplicities m and n".into())),
        }
    }

    /// Splitting index, required.
    pub fn split(&self) -> Result<usize> {
        self.p.ok_or_else(|| CliError::Usage("the problem needs a splitting index p".into()))
    }

    /// Polarization over the given multiplicities.
    pub fn polarization(&self) -> Result<Polarization> {
        let (Some(l), Some(u)) = (&self.lambda, &self.mu) else {
            return Err(CliError::Usage("the problem needs weights lambda and mu".into()));
        };
        let parse = |v: &[String]| {
            v.iter()
                .map(|s| parse_rational(s).map_err(|e| CliError::Parse(e.to_string())))
                .collect::<Result<Vec<_>>>()
        };
        Polarization::new(parse(l)?, parse(u)?, self.multiplicities()?).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// The morphism, if given, checked against the data.
    pub fn rs_morphism(&self, h: &HomData, mult: &Multiplicities) -> Result<Option<RsMorphism>> {
        let Some(rows) = &self.morphism else { return Ok(None) };
        let blocks = rows
            .iter()
            .map(|row| row.iter().map(|d| d.to_matrix(h.field)).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| CliError::Parse(e.to_string()))?;
        let w = RsMorphism { blocks };
        w.check(h, mult).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(Some(w))
    }
}

/// Serializes the blocks of a morphism.
pub fn morphism_doc(w: &RsMorphism) -> Vec<Vec<MatrixDoc>> {
    w.blocks.iter().map(|row| row.iter().map(|b| b.to_doc()).collect()).collect()
}
