//! Subspaces in canonical form and quotient data.

use crate::error::{ExactError, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A linear subspace of `field^ambient`, stored by a canonical basis.
///
/// The basis matrix has one column per basis vector and is in reduced column
/// echelon form, so two subspaces are equal exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// The span of the columns of `generators`.
    pub fn span(generators: &Matrix) -> Subspace {
        let r = generators.transpose().rref();
        let d = r.pivots.len();
        let basis = r.matrix.block(0, 0, d, generators.rows()).transpose();
        Subspace {
            ambient: generators.rows(),
            basis,
        }
    }

    /// The zero subspace.
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, ambient, 0),
        }
    }

    /// The whole space.
    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// The kernel of `a`, as a subspace of its source.
    pub fn kernel_of(a: &Matrix) -> Subspace {
        Subspace::span(&a.kernel())
    }

    /// The image of `a`, as a subspace of its target.
    pub fn image_of(a: &Matrix) -> Subspace {
        Subspace::span(a)
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Codimension in the ambient space.
    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Canonical basis, one vector per column.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Base field.
    pub fn field(&self) -> Field {
        self.basis.field()
    }

    /// Whether the column vectors of `v` all lie in the subspace.
    pub fn contains(&self, v: &Matrix) -> bool {
        v.cols() == 0 || self.basis.solve(v).is_ok()
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.contains(&other.basis)
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.basis.hstack(&other.basis))
    }

    /// Intersection of two subspaces.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let k = self.basis.hstack(&(-&other.basis)).kernel();
        let coeffs = k.block(0, 0, self.dim(), k.cols());
        Subspace::span(&(&self.basis * &coeffs))
    }

    /// Image of the subspace under `a`.
    pub fn map(&self, a: &Matrix) -> Subspace {
        Subspace::span(&(a * &self.basis))
    }
}

/// Projection and section for a quotient `field^ambient / S`, with the
/// complement recorded explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    /// `(ambient - dim S) x ambient` matrix with kernel exactly `S`.
    pub projection: Matrix,
    /// `ambient x (ambient - dim S)` matrix with `projection * section = I`.
    pub section: Matrix,
    /// Indices of the standard basis vectors spanning the recorded complement.
    pub complement: Vec<usize>,
}

/// Builds a projection onto `field^ambient / S` and a section of it.
///
/// The complement is spanned by the standard basis vectors at the non-pivot
/// positions of the echelon form of `S`, and the section maps the quotient
/// basis onto those vectors.
pub fn quotient_data(ambient: usize, s: &Subspace) -> Result<QuotientData> {
    if s.ambient_dim() != ambient {
        return Err(ExactError::Ambient(format!(
            "subspace lives in dimension {}, ambient is {ambient}",
            s.ambient_dim()
        )));
    }
    let field = s.field();
    let r = s.basis().transpose().rref();
    let complement: Vec<usize> = (0..ambient).filter(|c| !r.pivots.contains(c)).collect();
    let section = Matrix::identity(field, ambient).select_cols(&complement);
    let full = s.basis().hstack(&section);
    let inv = full.inverse()?;
    let projection = inv.block(s.dim(), 0, ambient - s.dim(), ambient);
    Ok(QuotientData {
        projection,
        section,
        complement,
    })
}
