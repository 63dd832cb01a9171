//! Dense matrices over an exact field.
//!
//! Arithmetic operators panic on shape or field mismatch, mirroring the
//! convention of dense linear algebra libraries; the solving routines return
//! [`ExactError`] values instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{ExactError, Result};
use crate::field::{Field, Scalar};

/// A dense row-major matrix whose entries all share one [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    /// The reduced matrix.
    pub matrix: Matrix,
    /// Column index of the pivot in each nonzero row.
    pub pivots: Vec<usize>,
}

impl Matrix {
    /// The zero matrix.
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// A scalar multiple of the identity.
    pub fn scalar(field: Field, n: usize, s: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    /// Builds a matrix from a closure over `(row, col)`.
    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                debug_assert_eq!(s.field(), field);
                data.push(s);
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from integer rows.
    pub fn from_i64_rows(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Builds a matrix from a flat row-major vector of scalars.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { field, rows, cols, data }
    }

    /// A column vector.
    pub fn column(field: Field, entries: Vec<Scalar>) -> Matrix {
        let n = entries.len();
        Matrix::from_vec(field, n, 1, entries)
    }

    /// A column vector from integers.
    pub fn column_i64(field: Field, entries: &[i64]) -> Matrix {
        Matrix::column(field, entries.iter().map(|&v| field.from_i64(v)).collect())
    }

    /// The standard basis vector `e_i` of length `n`.
    pub fn unit(field: Field, n: usize, i: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, 1);
        m.set(i, 0, field.one());
        m
    }

    /// The base field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(rows, cols)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entry at `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    /// Overwrites entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[i * self.cols + j] = v;
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    /// Flat row-major entries.
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Whether the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Transpose.
    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Kronecker product with left factor major indexing:
    /// entry `((i,k),(j,l)) = a[i][j] * b[k][l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        check_field(self, other);
        let (br, bc) = other.shape();
        Matrix::from_fn(self.field, self.rows * br, self.cols * bc, |r, c| {
            let a = self.get(r / br, c / bc);
            if a.is_zero() {
                self.field.zero()
            } else {
                a * other.get(r % br, c % bc)
            }
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        check_field(self, other);
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        check_field(self, other);
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::from_vec(self.field, self.rows + other.rows, self.cols, data)
    }

    /// Concatenates a list of matrices horizontally; `rows` fixes the shape when the list is empty.
    pub fn hcat(field: Field, rows: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, rows, 0), |acc, m| acc.hstack(m))
    }

    /// Concatenates a list of matrices vertically; `cols` fixes the shape when the list is empty.
    pub fn vcat(field: Field, cols: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, 0, cols), |acc, m| acc.vstack(m))
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: Field, parts: &[Matrix]) -> Matrix {
        let r: usize = parts.iter().map(|m| m.rows).sum();
        let c: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// The submatrix with rows `r0..r0+nr` and columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        Matrix::from_fn(self.field, nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Writes `m` into this matrix with top-left corner `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.set(r0 + i, c0 + j, m.get(i, j).clone());
            }
        }
    }

    /// Selected columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Selected rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Column `j` as a column vector.
    pub fn col(&self, j: usize) -> Matrix {
        self.select_cols(&[j])
    }

    /// Row-major flattening into a column vector.
    pub fn vectorize(&self) -> Matrix {
        Matrix::from_vec(self.field, self.rows * self.cols, 1, self.data.clone())
    }

    /// Reshapes the row-major entries into `rows x cols`.
    pub fn reshape(&self, rows: usize, cols: usize) -> Matrix {
        assert_eq!(rows * cols, self.rows * self.cols, "reshape size mismatch");
        Matrix::from_vec(self.field, rows, cols, self.data.clone())
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).inv();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let sub = &factor * m.get(row, j);
                    if !sub.is_zero() {
                        m.data[r * m.cols + j] -= &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            return self.transpose().rref().pivots.len();
        }
        self.rref().pivots.len()
    }

    /// Basis of the kernel as the columns of an `cols x (cols - rank)` matrix,
    /// one vector per free column of the row echelon form.
    pub fn kernel(&self) -> Matrix {
        let Rref { matrix: r, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (idx, &f) in free.iter().enumerate() {
            k.set(f, idx, self.field.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                k.set(pc, idx, -r.get(prow, f));
            }
        }
        k
    }

    /// Basis of the column space, taken from the pivot columns of `self`.
    pub fn column_space(&self) -> Matrix {
        let piv = self.rref().pivots;
        self.select_cols(&piv)
    }

    /// One solution `X` of `self * X = B`, with free variables set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        if self.field != b.field {
            return Err(ExactError::MixedFields(self.field.to_string(), b.field.to_string()));
        }
        if self.rows != b.rows {
            return Err(ExactError::Shape(format!(
                "system has {} rows, right-hand side {}",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b);
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(ExactError::NoSolution);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(prow, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(ExactError::Shape(format!("inverse of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let Rref { matrix: r, pivots } = self.hstack(&Matrix::identity(self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(ExactError::Singular);
        }
        Ok(r.block(0, n, n, n))
    }

    /// A right inverse `X` with `self * X = I`, requiring full row rank.
    pub fn right_inverse(&self) -> Result<Matrix> {
        self.solve(&Matrix::identity(self.field, self.rows))
            .map_err(|_| ExactError::Singular)
    }

    /// A left inverse `X` with `X * self = I`, requiring full column rank.
    pub fn left_inverse(&self) -> Result<Matrix> {
        Ok(self.transpose().right_inverse()?.transpose())
    }

    /// Whether `self` is square and invertible.
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Matrix product returning an error on mismatch.
    pub fn try_mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.field != o.field {
            return Err(ExactError::MixedFields(self.field.to_string(), o.field.to_string()));
        }
        if self.cols != o.rows {
            return Err(ExactError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(self.mul_unchecked(o))
    }

    fn mul_unchecked(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Integer power of a square matrix.
    pub fn pow(&self, e: u32) -> Matrix {
        (0..e).fold(Matrix::identity(self.field, self.rows), |acc, _| &acc * self)
    }

    /// Entries as canonical exact strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_exact_string()).collect())
            .collect()
    }

    /// Parses a matrix from rows of exact strings.
    pub fn from_string_rows(field: Field, rows: usize, cols: usize, entries: &[Vec<String>]) -> Result<Matrix> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(ExactError::Shape(format!("expected {rows}x{cols} entries")));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in entries {
            for s in r {
                data.push(field.parse(s)?);
            }
        }
        Ok(Matrix::from_vec(field, rows, cols, data))
    }

    /// Serializable form of this matrix.
    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            rows: self.rows,
            cols: self.cols,
            entries: self.to_string_rows(),
        }
    }
}

/// Serializable matrix: shape plus row-major exact strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    /// Number of rows.
    pub rows: usize,
    /// Number of columns.
    pub cols: usize,
    /// Row-major entries written as `num/den` or integers.
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    /// Converts back into a matrix over `field`.
    pub fn to_matrix(&self, field: Field) -> Result<Matrix> {
        Matrix::from_string_rows(field, self.rows, self.cols, &self.entries)
    }
}

fn check_field(a: &Matrix, b: &Matrix) {
    assert_eq!(a.field, b.field, "mixed fields");
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_exact_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        check_field(self, o);
        assert_eq!(
            self.cols, o.rows,
            "product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, o.rows, o.cols
        );
        self.mul_unchecked(o)
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        check_field(self, o);
        assert_eq!(self.shape(), o.shape(), "sum shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        check_field(self, o);
        assert_eq!(self.shape(), o.shape(), "difference shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! owned_matrix_op {
    ($tr:ident, $m:ident) => {
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, o: Matrix) -> Matrix {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, o: &Matrix) -> Matrix {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Matrix> for &'a Matrix {
            type Output = Matrix;
            fn $m(self, o: Matrix) -> Matrix {
                self.$m(&o)
            }
        }
    };
}
owned_matrix_op!(Mul, mul);
owned_matrix_op!(Add, add);
owned_matrix_op!(Sub, sub);

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

/// Solves `a * x = b` for a single right-hand side.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn identity_solve() {
        let a = Matrix::identity(Q, 2);
        let b = Matrix::column_i64(Q, &[3, 4]);
        assert_eq!(solve_linear(&a, &b).unwrap(), b);
    }

    #[test]
    fn underdetermined_solve() {
        let a = Matrix::from_i64_rows(Q, &[vec![1, 0]]);
        let b = Matrix::column_i64(Q, &[5]);
        let x = solve_linear(&a, &b).unwrap();
        assert_eq!(&a * &x, b);
        assert_eq!(x, Matrix::column_i64(Q, &[5, 0]));
    }

    #[test]
    fn no_solution() {
        let a = Matrix::zeros(Q, 1, 1);
        let b = Matrix::column_i64(Q, &[1]);
        assert_eq!(solve_linear(&a, &b), Err(ExactError::NoSolution));
    }

    #[test]
    fn solve_errors() {
        let a = Matrix::identity(Q, 2);
        assert!(matches!(a.solve(&Matrix::column_i64(Q, &[1])), Err(ExactError::Shape(_))));
        let b = Matrix::column_i64(Field::Prime(3), &[1, 1]);
        assert!(matches!(a.solve(&b), Err(ExactError::MixedFields(_, _))));
    }

    #[test]
    fn kernel_examples() {
        let a = Matrix::from_i64_rows(Q, &[vec![1, 0]]);
        assert_eq!(a.kernel(), Matrix::column_i64(Q, &[0, 1]));
        let z = Matrix::zeros(Q, 2, 3);
        assert_eq!(z.kernel(), Matrix::identity(Q, 3));
    }

    #[test]
    fn kernel_gf2_exhaustive() {
        let f = Field::Prime(2);
        let a = Matrix::from_i64_rows(f, &[vec![1, 0, 0]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 2);
        let mut count = 0;
        for bits in 0..8i64 {
            let v = Matrix::column_i64(f, &[bits & 1, (bits >> 1) & 1, (bits >> 2) & 1]);
            if (&a * &v).is_zero() {
                count += 1;
                assert!(k.solve(&v).is_ok());
            }
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn inverse_and_kron() {
        let a = Matrix::from_i64_rows(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(Q, 2));
        let b = Matrix::from_i64_rows(Q, &[vec![0, 1], vec![1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 1), &Q.from_i64(2));
        assert_eq!(k.get(3, 2), &Q.from_i64(1));
        assert!(Matrix::zeros(Q, 2, 2).inverse().is_err());
    }

    #[test]
    fn one_sided_inverses() {
        let a = Matrix::from_i64_rows(Q, &[vec![1, 2, 3], vec![0, 1, 4]]);
        let r = a.right_inverse().unwrap();
        assert_eq!(&a * &r, Matrix::identity(Q, 2));
        let l = a.transpose().left_inverse().unwrap();
        assert_eq!(&l * &a.transpose(), Matrix::identity(Q, 2));
    }

    #[test]
    fn doc_round_trip() {
        let a = Matrix::from_fn(Q, 2, 2, |i, j| Q.from_frac(i as i64 + 1, j as i64 + 2));
        let doc = a.to_doc();
        assert_eq!(doc.to_matrix(Q).unwrap(), a);
    }
}
