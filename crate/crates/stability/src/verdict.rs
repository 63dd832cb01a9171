//! Verdicts and destabilizing witnesses.

use exactfield::{Matrix, MatrixDoc, Subspace};
use serde::{Deserialize, Serialize};

/// A family of subspaces `M'_i ⊂ M_i`, `N'_l ⊂ N_l` violating an inequality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    /// The subspaces `M'_i`.
    pub sources: Vec<Subspace>,
    /// The subspaces `N'_l`.
    pub targets: Vec<Subspace>,
    /// Index of the point of the unipotent orbit where the violation occurs (zero for the point itself).
    pub orbit_index: usize,
}

impl Witness {
    /// Dimensions of the source subspaces.
    pub fn source_dims(&self) -> Vec<usize> {
        self.sources.iter().map(Subspace::dim).collect()
    }

    /// Dimensions of the target subspaces.
    pub fn target_dims(&self) -> Vec<usize> {
        self.targets.iter().map(Subspace::dim).collect()
    }

    /// Echelon bases in serializable form.
    pub fn to_doc(&self) -> WitnessDoc {
        let doc = |s: &Subspace| basis_doc(s.basis());
        WitnessDoc {
            sources: self.sources.iter().map(doc).collect(),
            targets: self.targets.iter().map(doc).collect(),
            orbit_index: self.orbit_index,
        }
    }
}

fn basis_doc(m: &Matrix) -> MatrixDoc {
    m.to_doc()
}

/// Serializable form of a [`Witness`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    /// Echelon bases of the source subspaces, one column per vector.
    pub sources: Vec<MatrixDoc>,
    /// Echelon bases of the target subspaces.
    pub targets: Vec<MatrixDoc>,
    /// Index in the unipotent orbit.
    pub orbit_index: usize,
}

/// Outcome of a stability query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    /// Whether the point is semistable.
    pub semistable: bool,
    /// Whether the point is stable.
    pub stable: bool,
    /// A violating family for the queried notion, if any.
    pub witness: Option<Witness>,
}

impl StabilityVerdict {
    /// The verdict for the queried notion.
    pub fn holds(&self, strict: bool) -> bool {
        if strict {
            self.stable
        } else {
            self.semistable
        }
    }
}
