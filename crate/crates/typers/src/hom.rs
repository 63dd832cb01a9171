//! Composition data for morphisms of type `(r,s)`.
//!
//! Sources are `E_1, …, E_r` and targets `F_1, …, F_s`, all indexed from zero.
//! The spaces are `H[l][i] = Hom(E_i, F_l)`, `A[j][i] = Hom(E_i, E_j)` for
//! `i ≤ j` and `B[m][l] = Hom(F_l, F_m)` for `l ≤ m`, with `A[i][i]` and
//! `B[l][l]` one-dimensional and spanned by the identity.
//!
//! A composition tensor `X ⊗ Y → Z` is stored as a `Z x (X·Y)` matrix on the
//! left-major basis of `X ⊗ Y`, the left factor being the outer map:
//!
//! * `comp_ha[(l, j, i)]: H[l][j] ⊗ A[j][i] → H[l][i]`
//! * `comp_bh[(m, l, i)]: B[m][l] ⊗ H[l][i] → H[m][i]`
//! * `comp_aa[(k, j, i)]: A[k][j] ⊗ A[j][i] → A[k][i]`
//! * `comp_bb[(n, m, l)]: B[n][m] ⊗ B[m][l] → B[n][l]`
//!
//! Only the entries whose indices are pairwise distinct are stored; the others
//! are identities.

use std::collections::{BTreeMap, HashMap};

use exactfield::{Field, Matrix, MatrixDoc};
use serde::{Deserialize, Serialize};

use crate::error::{Result, TypeError};

/// Key of a composition tensor.
pub type Key = (usize, usize, usize);

/// Composition data of a type-(r,s) morphism space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomData {
    /// Base field.
    pub field: Field,
    /// Number of sources.
    pub r: usize,
    /// Number of targets.
    pub s: usize,
    /// `h[l][i] = dim H[l][i]`.
    pub h: Vec<Vec<usize>>,
    /// `a[j][i] = dim A[j][i]` for `i ≤ j`, zero above the diagonal.
    pub a: Vec<Vec<usize>>,
    /// `b[m][l] = dim B[m][l]` for `l ≤ m`, zero above the diagonal.
    pub b: Vec<Vec<usize>>,
    /// `H[l][j] ⊗ A[j][i] → H[l][i]` for `i < j`.
    pub comp_ha: BTreeMap<Key, Matrix>,
    /// `B[m][l] ⊗ H[l][i] → H[m][i]` for `l < m`.
    pub comp_bh: BTreeMap<Key, Matrix>,
    /// `A[k][j] ⊗ A[j][i] → A[k][i]` for `i < j < k`.
    pub comp_aa: BTreeMap<Key, Matrix>,
    /// `B[n][m] ⊗ B[m][l] → B[n][l]` for `l < m < n`.
    pub comp_bb: BTreeMap<Key, Matrix>,
}

fn stored<'a>(map: &'a BTreeMap<Key, Matrix>, key: Key, what: &str) -> &'a Matrix {
    map.get(&key).unwrap_or_else(|| panic!("missing {what} tensor {key:?}"))
}

impl HomData {
    /// `H[l][j] ⊗ A[j][i] → H[l][i]`, identities included.
    pub fn ha(&self, l: usize, j: usize, i: usize) -> Matrix {
        if i == j {
            Matrix::identity(self.field, self.h[l][i])
        } else {
            stored(&self.comp_ha, (l, j, i), "ha").clone()
        }
    }

    /// `B[m][l] ⊗ H[l][i] → H[m][i]`, identities included.
    pub fn bh(&self, m: usize, l: usize, i: usize) -> Matrix {
        if l == m {
            Matrix::identity(self.field, self.h[m][i])
        } else {
            stored(&self.comp_bh, (m, l, i), "bh").clone()
        }
    }

    /// `A[k][j] ⊗ A[j][i] → A[k][i]`, identities included.
    pub fn aa(&self, k: usize, j: usize, i: usize) -> Matrix {
        if k == j || j == i {
            Matrix::identity(self.field, self.a[k][i])
        } else {
            stored(&self.comp_aa, (k, j, i), "aa").clone()
        }
    }

    /// `B[n][m] ⊗ B[m][l] → B[n][l]`, identities included.
    pub fn bb(&self, n: usize, m: usize, l: usize) -> Matrix {
        if n == m || m == l {
            Matrix::identity(self.field, self.b[n][l])
        } else {
            stored(&self.comp_bb, (n, m, l), "bb").clone()
        }
    }

    /// Checks the tensor shapes and every associativity identity.
    pub fn validate(&self) -> Result<()> {
        let (r, s) = (self.r, self.s);
        let bad = |what: String| Err(TypeError::Composition(what));
        if self.h.len() != s || self.h.iter().any(|row| row.len() != r) {
            return bad("h has the wrong shape".into());
        }
        if self.a.len() != r || self.b.len() != s {
            return bad("a or b has the wrong shape".into());
        }
        for i in 0..r {
            if self.a[i][i] != 1 {
                return bad(format!("dim A[{i}][{i}] must be 1"));
            }
        }
        for l in 0..s {
            if self.b[l][l] != 1 {
                return bad(format!("dim B[{l}][{l}] must be 1"));
            }
        }
        for l in 0..s {
            for j in 0..r {
                for i in 0..j {
                    check_shape(&self.ha(l, j, i), self.h[l][i], self.h[l][j] * self.a[j][i], "ha")?;
                }
            }
        }
        for m in 0..s {
            for l in 0..m {
                for i in 0..r {
                    check_shape(&self.bh(m, l, i), self.h[m][i], self.b[m][l] * self.h[l][i], "bh")?;
                }
            }
        }
        for k in 0..r {
            for j in 0..k {
                for i in 0..j {
                    check_shape(&self.aa(k, j, i), self.a[k][i], self.a[k][j] * self.a[j][i], "aa")?;
                }
            }
        }
        for n in 0..s {
            for m in 0..n {
                for l in 0..m {
                    check_shape(&self.bb(n, m, l), self.b[n][l], self.b[n][m] * self.b[m][l], "bb")?;
                }
            }
        }
        for (name, ok) in self.associativity_checks() {
            if !ok {
                return bad(name);
            }
        }
        Ok(())
    }

    /// Every associativity identity, by name.
    pub fn associativity_checks(&self) -> Vec<(String, bool)> {
        let f = self.field;
        let id = |n: usize| Matrix::identity(f, n);
        let (r, s) = (self.r, self.s);
        let mut out = vec![];
        for l in 0..s {
            for k in 0..r {
                for j in 0..=k {
                    for i in 0..=j {
                        let lhs = &self.ha(l, j, i) * &self.ha(l, k, j).kron(&id(self.a[j][i]));
                        let rhs = &self.ha(l, k, i) * &id(self.h[l][k]).kron(&self.aa(k, j, i));
                        out.push((format!("(h a) a = h (a a) at H[{l}][{k}] A[{k}][{j}] A[{j}][{i}]"), lhs == rhs));
                    }
                }
            }
        }
        for m in 0..s {
            for l in 0..=m {
                for j in 0..r {
                    for i in 0..=j {
                        let lhs = &self.bh(m, l, i) * &id(self.b[m][l]).kron(&self.ha(l, j, i));
                        let rhs = &self.ha(m, j, i) * &self.bh(m, l, j).kron(&id(self.a[j][i]));
                        out.push((format!("b (h a) = (b h) a at B[{m}][{l}] H[{l}][{j}] A[{j}][{i}]"), lhs == rhs));
                    }
                }
            }
        }
        for n in 0..s {
            for m in 0..=n {
                for l in 0..=m {
                    for i in 0..r {
                        let lhs = &self.bh(n, l, i) * &self.bb(n, m, l).kron(&id(self.h[l][i]));
                        let rhs = &self.bh(n, m, i) * &id(self.b[n][m]).kron(&self.bh(m, l, i));
                        out.push((format!("(b b) h = b (b h) at B[{n}][{m}] B[{m}][{l}] H[{l}][{i}]"), lhs == rhs));
                    }
                }
            }
        }
        for k in 0..r {
            for j in 0..=k {
                for i in 0..=j {
                    for x in 0..=i {
                        let lhs = &self.aa(k, i, x) * &self.aa(k, j, i).kron(&id(self.a[i][x]));
                        let rhs = &self.aa(k, j, x) * &id(self.a[k][j]).kron(&self.aa(j, i, x));
                        out.push((format!("A associativity at ({k},{j},{i},{x})"), lhs == rhs));
                    }
                }
            }
        }
        for n in 0..s {
            for m in 0..=n {
                for l in 0..=m {
                    for x in 0..=l {
                        let lhs = &self.bb(n, l, x) * &self.bb(n, m, l).kron(&id(self.b[l][x]));
                        let rhs = &self.bb(n, m, x) * &id(self.b[n][m]).kron(&self.bb(m, l, x));
                        out.push((format!("B associativity at ({n},{m},{l},{x})"), lhs == rhs));
                    }
                }
            }
        }
        out
    }

    /// The data of the transposed morphisms `⊕ F_l* ⊗ N_l* → ⊕ E_i* ⊗ M_i*`,
    /// of type `(s, r)` with both orders reversed.
    pub fn transpose(&self) -> HomData {
        let (r, s) = (self.r, self.s);
        let f = self.field;
        let h = (0..r).map(|l| (0..s).map(|k| self.h[s - 1 - k][r - 1 - l]).collect()).collect();
        let mut a = vec![vec![0; s]; s];
        for j in 0..s {
            for k in 0..=j {
                a[j][k] = self.b[s - 1 - k][s - 1 - j];
            }
        }
        let mut b = vec![vec![0; r]; r];
        for m in 0..r {
            for l in 0..=m {
                b[m][l] = self.a[r - 1 - l][r - 1 - m];
            }
        }
        let mut out = HomData {
            field: f,
            r: s,
            s: r,
            h,
            a,
            b,
            comp_ha: BTreeMap::new(),
            comp_bh: BTreeMap::new(),
            comp_aa: BTreeMap::new(),
            comp_bb: BTreeMap::new(),
        };
        for l in 0..r {
            for j in 0..s {
                for k in 0..j {
                    let (bl, hl, hi) = (s - 1 - k, s - 1 - j, r - 1 - l);
                    let m = &self.bh(bl, hl, hi) * &swap(f, out.h[l][j], out.a[j][k]);
                    out.comp_ha.insert((l, j, k), m);
                }
            }
        }
        for m in 0..r {
            for l in 0..m {
                for k in 0..s {
                    let (hl, aj, ai) = (s - 1 - k, r - 1 - l, r - 1 - m);
                    let mat = &self.ha(hl, aj, ai) * &swap(f, out.b[m][l], out.h[l][k]);
                    out.comp_bh.insert((m, l, k), mat);
                }
            }
        }
        for k in 0..s {
            for j in 0..k {
                for i in 0..j {
                    let mat = &self.bb(s - 1 - i, s - 1 - j, s - 1 - k) * &swap(f, out.a[k][j], out.a[j][i]);
                    out.comp_aa.insert((k, j, i), mat);
                }
            }
        }
        for n in 0..r {
            for m in 0..n {
                for l in 0..m {
                    let mat = &self.aa(r - 1 - l, r - 1 - m, r - 1 - n) * &swap(f, out.b[n][m], out.b[m][l]);
                    out.comp_bb.insert((n, m, l), mat);
                }
            }
        }
        out
    }
}

fn swap(f: Field, da: usize, db: usize) -> Matrix {
    exactfield::swap_matrix(f, da, db)
}

fn check_shape(m: &Matrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.shape() == (rows, cols) {
        Ok(())
    } else {
        Err(TypeError::Dimension(format!(
            "{what} tensor is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )))
    }
}

/// The binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc as usize
}

/// Exponent vectors of degree `d` in `v` variables, in descending lexicographic order.
pub fn monomials(v: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(v: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(v - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    if v == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(v, d as u32, &mut vec![], &mut out);
    out
}

/// Matrix of polynomial multiplication `S^d1 ⊗ S^d2 → S^(d1+d2)` on monomial bases.
pub fn multiplication_tensor(field: Field, v: usize, d1: usize, d2: usize) -> Matrix {
    let m1 = monomials(v, d1);
    let m2 = monomials(v, d2);
    let target: HashMap<Vec<u32>, usize> = monomials(v, d1 + d2).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = Matrix::zeros(field, target.len(), m1.len() * m2.len());
    for (i, x) in m1.iter().enumerate() {
        for (j, y) in m2.iter().enumerate() {
            let prod: Vec<u32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            out.set(target[&prod], i * m2.len() + j, field.one());
        }
    }
    out
}

/// Composition data for line bundles `E_i = O(e_i)`, `F_l = O(f_l)` on `P^n`.
///
/// Every Hom space is a space of homogeneous forms in `n + 1` variables and
/// every composition is multiplication.
pub fn projective_space_hom_data(field: Field, n: usize, e: &[i64], f: &[i64]) -> Result<HomData> {
    if n == 0 || e.is_empty() || f.is_empty() {
        return Err(TypeError::Degrees("need n ≥ 1 and nonempty degree lists".into()));
    }
    if e.windows(2).any(|w| w[0] >= w[1]) || f.windows(2).any(|w| w[0] >= w[1]) {
        return Err(TypeError::Degrees("degrees must be strictly increasing".into()));
    }
    if f[0] <= *e.last().expect("nonempty") {
        return Err(TypeError::Degrees("f_1 must exceed e_r".into()));
    }
    let v = n + 1;
    let (r, s) = (e.len(), f.len());
    let dim = |d: i64| binomial(n + d as usize, n);
    let h: Vec<Vec<usize>> = (0..s).map(|l| (0..r).map(|i| dim(f[l] - e[i])).collect()).collect();
    let mut a = vec![vec![0; r]; r];
    for j in 0..r {
        for i in 0..=j {
            a[j][i] = dim(e[j] - e[i]);
        }
    }
    let mut b = vec![vec![0; s]; s];
    for m in 0..s {
        for l in 0..=m {
            b[m][l] = dim(f[m] - f[l]);
        }
    }
    let deg = |x: i64| x as usize;
    let mut out = HomData {
        field,
        r,
        s,
        h,
        a,
        b,
        comp_ha: BTreeMap::new(),
        comp_bh: BTreeMap::new(),
        comp_aa: BTreeMap::new(),
        comp_bb: BTreeMap::new(),
    };
    for l in 0..s {
        for j in 0..r {
            for i in 0..j {
                out.comp_ha.insert((l, j, i), multiplication_tensor(field, v, deg(f[l] - e[j]), deg(e[j] - e[i])));
            }
        }
    }
    for m in 0..s {
        for l in 0..m {
            for i in 0..r {
                out.comp_bh.insert((m, l, i), multiplication_tensor(field, v, deg(f[m] - f[l]), deg(f[l] - e[i])));
            }
        }
    }
    for k in 0..r {
        for j in 0..k {
            for i in 0..j {
                out.comp_aa.insert((k, j, i), multiplication_tensor(field, v, deg(e[k] - e[j]), deg(e[j] - e[i])));
            }
        }
    }
    for nn in 0..s {
        for m in 0..nn {
            for l in 0..m {
                out.comp_bb.insert((nn, m, l), multiplication_tensor(field, v, deg(f[nn] - f[m]), deg(f[m] - f[l])));
            }
        }
    }
    Ok(out)
}

/// Ext¹ vanishing conditions that fail for line bundles on `P^n`.
///
/// Only the conditions between the bundles themselves are examined; on `P^n`
/// with `n ≥ 2` the list is always empty. On `P^1` the group
/// `Ext¹(O(a), O(b))` is nonzero exactly when `b − a ≤ −2`.
pub fn projective_space_ext_warnings(n: usize, e: &[i64], f: &[i64]) -> Vec<String> {
    let mut out = vec![];
    if n != 1 || f.is_empty() {
        return out;
    }
    let bad = |a: i64, b: i64| b - a <= -2;
    let f1 = f[0];
    for (j, &fj) in f.iter().enumerate().skip(1) {
        if bad(f1, fj) {
            out.push(format!("Ext1(F_1, F_{}) is nonzero", j + 1));
        }
    }
    for (i, &ei) in e.iter().enumerate() {
        if bad(f1, ei) {
            out.push(format!("Ext1(F_1, E_{}) is nonzero", i + 1));
        }
        if bad(ei, f1) {
            out.push(format!("Ext1(E_{}, F_1) is nonzero", i + 1));
        }
        for (k, &ek) in e.iter().enumerate().skip(i) {
            if bad(ei, ek) {
                out.push(format!("Ext1(E_{}, E_{}) is nonzero", i + 1, k + 1));
            }
        }
    }
    out
}

/// One stored composition tensor in a [`HomDoc`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionDoc {
    /// One of `ha`, `bh`, `aa`, `bb`.
    pub kind: String,
    /// The three indices of the tensor.
    pub indices: [usize; 3],
    /// The tensor as a matrix.
    pub matrix: MatrixDoc,
}

/// JSON form of [`HomData`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDoc {
    /// Field tag, `rationals` or `gf:p`.
    pub field: String,
    /// Number of sources.
    pub r: usize,
    /// Number of targets.
    pub s: usize,
    /// `dim H[l][i]`.
    pub h: Vec<Vec<usize>>,
    /// `dim A[j][i]`.
    pub a: Vec<Vec<usize>>,
    /// `dim B[m][l]`.
    pub b: Vec<Vec<usize>>,
    /// Stored composition tensors.
    pub compositions: Vec<CompositionDoc>,
}

impl HomData {
    /// Converts to the JSON document form.
    pub fn to_doc(&self) -> HomDoc {
        let mut compositions = vec![];
        for (kind, map) in [("ha", &self.comp_ha), ("bh", &self.comp_bh), ("aa", &self.comp_aa), ("bb", &self.comp_bb)] {
            for (k, m) in map {
                compositions.push(CompositionDoc {
                    kind: kind.into(),
                    indices: [k.0, k.1, k.2],
                    matrix: m.to_doc(),
                });
            }
        }
        HomDoc {
            field: self.field.to_string(),
            r: self.r,
            s: self.s,
            h: self.h.clone(),
            a: self.a.clone(),
            b: self.b.clone(),
            compositions,
        }
    }

    /// Builds from the JSON document form and validates.
    pub fn from_doc(doc: &HomDoc) -> Result<HomData> {
        let field: Field = doc.field.parse().map_err(|e| TypeError::Document(format!("{e}")))?;
        let mut out = HomData {
            field,
            r: doc.r,
            s: doc.s,
            h: doc.h.clone(),
            a: doc.a.clone(),
            b: doc.b.clone(),
            comp_ha: BTreeMap::new(),
            comp_bh: BTreeMap::new(),
            comp_aa: BTreeMap::new(),
            comp_bb: BTreeMap::new(),
        };
        for c in &doc.compositions {
            let m = c.matrix.to_matrix(field)?;
            let key = (c.indices[0], c.indices[1], c.indices[2]);
            let map = match c.kind.as_str() {
                "ha" => &mut out.comp_ha,
                "bh" => &mut out.comp_bh,
                "aa" => &mut out.comp_aa,
                "bb" => &mut out.comp_bb,
                other => return Err(TypeError::Document(format!("unknown composition kind {other}"))),
            };
            map.insert(key, m);
        }
        out.check_complete()?;
        out.validate()?;
        Ok(out)
    }

    fn check_complete(&self) -> Result<()> {
        let (r, s) = (self.r, self.s);
        let missing = |what: &str, k: Key| Err(TypeError::Document(format!("missing {what} tensor {k:?}")));
        if self.h.len() != s || self.h.iter().any(|x| x.len() != r) || self.a.len() != r || self.b.len() != s {
            return Err(TypeError::Document("dimension tables have the wrong shape".into()));
        }
        for l in 0..s {
            for j in 0..r {
                for i in 0..j {
                    if !self.comp_ha.contains_key(&(l, j, i)) {
                        return missing("ha", (l, j, i));
                    }
                }
            }
        }
        for m in 0..s {
            for l in 0..m {
                for i in 0..r {
                    if !self.comp_bh.contains_key(&(m, l, i)) {
                        return missing("bh", (m, l, i));
                    }
                }
            }
        }
        for k in 0..r {
            for j in 0..k {
                for i in 0..j {
                    if !self.comp_aa.contains_key(&(k, j, i)) {
                        return missing("aa", (k, j, i));
                    }
                }
            }
        }
        for n in 0..s {
            for m in 0..n {
                for l in 0..m {
                    if !self.comp_bb.contains_key(&(n, m, l)) {
                        return missing("bb", (n, m, l));
                    }
                }
            }
        }
        Ok(())
    }

    /// Serializes to pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    /// Parses and validates JSON.
    pub fn from_json(s: &str) -> Result<HomData> {
        let doc: HomDoc = serde_json::from_str(s).map_err(|e| TypeError::Document(e.to_string()))?;
        HomData::from_doc(&doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn p2_dimensions() {
        let h = projective_space_hom_data(Q, 2, &[-2, -1], &[0]).unwrap();
        assert_eq!(h.h[0], vec![6, 3]);
        assert_eq!(h.a[1][0], 3);
        h.validate().unwrap();
    }

    #[test]
    fn p1_linear_forms() {
        let h = projective_space_hom_data(Q, 1, &[-1], &[0]).unwrap();
        assert_eq!(h.h[0][0], 2);
    }

    #[test]
    fn p1_multiplication_table() {
        let m = multiplication_tensor(Q, 2, 1, 1);
        let basis = monomials(2, 2);
        assert_eq!(basis, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let col = |i: usize, j: usize| m.col(i * 2 + j);
        assert_eq!(col(0, 0), Matrix::column_i64(Q, &[1, 0, 0]));
        assert_eq!(col(0, 1), Matrix::column_i64(Q, &[0, 1, 0]));
        assert_eq!(col(1, 0), Matrix::column_i64(Q, &[0, 1, 0]));
        assert_eq!(col(1, 1), Matrix::column_i64(Q, &[0, 0, 1]));
    }

    #[test]
    fn ext_warnings_on_the_line() {
        assert!(projective_space_ext_warnings(2, &[-2, -1], &[0]).is_empty());
        let w = projective_space_ext_warnings(1, &[-2, -1], &[0]);
        assert_eq!(w, vec!["Ext1(F_1, E_1) is nonzero".to_string()]);
    }

    #[test]
    fn degree_order_is_enforced() {
        assert!(projective_space_hom_data(Q, 2, &[-1, -2], &[0]).is_err());
        assert!(projective_space_hom_data(Q, 2, &[-2, 0], &[0]).is_err());
    }

    #[test]
    fn transpose_is_an_involution_and_valid() {
        let h = projective_space_hom_data(Q, 2, &[-3, -2, -1], &[0, 1]).unwrap();
        let t = h.transpose();
        t.validate().unwrap();
        assert_eq!(t.transpose(), h);
    }

    #[test]
    fn json_round_trip() {
        let h = projective_space_hom_data(Field::Prime(3), 1, &[-2, -1], &[0, 1]).unwrap();
        assert_eq!(HomData::from_json(&h.to_json()).unwrap(), h);
        assert!(HomData::from_json("{").is_err());
    }
}
