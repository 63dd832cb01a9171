//! JSON documents for spaces and points.
//!
//! Every scalar is written as an exact string (`num/den` or an integer).

use exactfield::{Field, MatrixDoc};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ThetaError};
use crate::point::MorphismPoint;
use crate::space::{Dims, ThetaSpace};

/// Serialized [`ThetaSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaDoc {
    /// `rationals` or `gf:p`.
    pub field: String,
    /// The eight dimensions.
    pub dims: Dims,
    /// Matrix of `rho1`.
    pub rho1: MatrixDoc,
    /// Matrix of `rho2`.
    pub rho2: MatrixDoc,
    /// Matrix of `mu`.
    pub mu: MatrixDoc,
    /// Matrix of `nu`.
    pub nu: MatrixDoc,
}

/// Serialized [`MorphismPoint`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDoc {
    /// Component in `N1 ⊗ M`.
    pub psi1: MatrixDoc,
    /// Component in `N2 ⊗ M`.
    pub psi2: MatrixDoc,
    /// Component in `M1`.
    pub phi1: MatrixDoc,
    /// Component in `M2`.
    pub phi2: MatrixDoc,
}

impl ThetaSpace {
    /// Serializable form.
    pub fn to_doc(&self) -> ThetaDoc {
        ThetaDoc {
            field: self.field.to_string(),
            dims: self.dims,
            rho1: self.rho1.to_doc(),
            rho2: self.rho2.to_doc(),
            mu: self.mu.to_doc(),
            nu: self.nu.to_doc(),
        }
    }

    /// Decodes a document, checking shapes.
    pub fn from_doc(doc: &ThetaDoc) -> Result<ThetaSpace> {
        let field: Field = doc.field.parse()?;
        ThetaSpace::new(
            field,
            doc.dims,
            doc.rho1.to_matrix(field)?,
            doc.rho2.to_matrix(field)?,
            doc.mu.to_matrix(field)?,
            doc.nu.to_matrix(field)?,
        )
    }

    /// Pretty JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("documents always serialize")
    }

    /// Parses JSON text.
    pub fn from_json(s: &str) -> Result<ThetaSpace> {
        let doc: ThetaDoc = serde_json::from_str(s).map_err(|e| ThetaError::Document(e.to_string()))?;
        ThetaSpace::from_doc(&doc)
    }
}

impl MorphismPoint {
    /// Serializable form.
    pub fn to_doc(&self) -> PointDoc {
        PointDoc {
            psi1: self.psi1.to_doc(),
            psi2: self.psi2.to_doc(),
            phi1: self.phi1.to_doc(),
            phi2: self.phi2.to_doc(),
        }
    }

    /// Decodes a document against its host space.
    pub fn from_doc(t: &ThetaSpace, doc: &PointDoc) -> Result<MorphismPoint> {
        let f = t.field;
        MorphismPoint::new(
            t,
            doc.psi1.to_matrix(f)?,
            doc.psi2.to_matrix(f)?,
            doc.phi1.to_matrix(f)?,
            doc.phi2.to_matrix(f)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_point_w0, random_theta, ThetaShape};
    use rand::SeedableRng;

    #[test]
    fn json_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let t = random_theta(Field::Rationals, &ThetaShape::default(), &mut rng);
        let back = ThetaSpace::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        let w = random_point_w0(&t, &mut rng);
        assert_eq!(MorphismPoint::from_doc(&t, &w.to_doc()).unwrap(), w);
        assert!(ThetaSpace::from_json("{").is_err());
    }
}
