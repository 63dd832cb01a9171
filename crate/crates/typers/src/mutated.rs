//! Hom data of the mutated morphisms.
//!
//! For a splitting index `p`, the mutated morphisms have type
//! `(p + 1, r + s − p − 1)`. Their sources are `E_0, …, E_{p−1}, F_0` and
//! their targets are the cokernels `G_p, …, G_{r−1}` followed by
//! `F_1, …, F_{s−1}`. Each new Hom space is realized inside an ambient space
//! built from the old ones, as a subspace (a kernel) or as a quotient, and the
//! compositions are induced from ambient compositions.

use exactfield::{quotient_data, swap_matrix, Field, Matrix, Subspace};
use mutation::DualSpace;
use theta::MorphismPoint;

use crate::build::Layout;
use crate::error::{Result, TypeError};
use crate::hom::HomData;
use crate::morphism::{Multiplicities, RsMorphism};

/// A space realized inside an ambient coordinate space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realized {
    /// `ambient x dim` matrix sending coordinates to ambient vectors.
    pub lift: Matrix,
    /// `dim x ambient` matrix with `reduce · lift = I`.
    pub reduce: Matrix,
    /// Basis of the subspace divided out, as columns; empty unless a quotient.
    pub ideal: Matrix,
}

impl Realized {
    /// The ambient space itself.
    pub fn plain(f: Field, d: usize) -> Realized {
        Realized { lift: Matrix::identity(f, d), reduce: Matrix::identity(f, d), ideal: Matrix::zeros(f, d, 0) }
    }

    /// The quotient of the ambient space by the span of the columns of `ideal`.
    pub fn quotient(ideal: &Matrix) -> Result<Realized> {
        let amb = ideal.rows();
        let qd = quotient_data(amb, &Subspace::span(ideal))?;
        Ok(Realized { lift: qd.section, reduce: qd.projection, ideal: Subspace::span(ideal).basis().clone() })
    }

    /// The kernel of `map`.
    pub fn kernel(map: &Matrix) -> Result<Realized> {
        let k = map.kernel();
        let reduce = k.left_inverse()?;
        Ok(Realized { ideal: Matrix::zeros(map.field(), map.cols(), 0), lift: k, reduce })
    }

    /// Dimension of the realized space.
    pub fn dim(&self) -> usize {
        self.lift.cols()
    }

    fn contains(&self, v: &Matrix) -> bool {
        let rest = v - &(&self.lift * &(&self.reduce * v));
        let r0 = self.ideal.rank();
        rest.is_zero() || self.ideal.hstack(&rest).rank() == r0
    }

    fn in_ideal(&self, v: &Matrix) -> bool {
        (&self.reduce * v).is_zero() && self.contains(v)
    }
}

fn induce(c: &Matrix, x: &Realized, y: &Realized, z: &Realized, what: &str) -> Result<Matrix> {
    let v = c * &x.lift.kron(&y.lift);
    if !z.contains(&v) {
        return Err(TypeError::NotWellDefined(format!("{what}: image leaves the target")));
    }
    let left = c * &x.ideal.kron(&y.lift);
    let right = c * &x.lift.kron(&y.ideal);
    if !z.in_ideal(&left) || !z.in_ideal(&right) {
        return Err(TypeError::NotWellDefined(format!("{what}: the divided-out part is not preserved")));
    }
    Ok(&z.reduce * &v)
}

/// Hom data of the mutated morphisms together with the realizations of the new spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutatedHomData {
    /// The splitting index.
    pub p: usize,
    /// The resulting data, of type `(p + 1, r + s − p − 1)`.
    pub data: HomData,
    /// Realization of each `H'[l][i]`.
    pub h_spaces: Vec<Vec<Realized>>,
    /// Realization of each `B'[m][l]`, for `l ≤ m`.
    pub b_spaces: Vec<Vec<Realized>>,
}

/// `A_{ki} → H[0][i] ⊗ H[0][k]*`, `a ↦ (x ↦ x ∘ a)`.
pub fn canonical_embedding(h: &HomData, k: usize, i: usize) -> Matrix {
    let f = h.field;
    let (hi, hk, a) = (h.h[0][i], h.h[0][k], h.a[k][i]);
    let c = h.ha(0, k, i);
    Matrix::from_fn(f, hi * hk, a, |row, col| c.get(row / hk.max(1), (row % hk.max(1)) * a + col).clone())
}

/// Builds the Hom data of the mutated morphisms.
pub fn mutated_hom_data(h: &HomData, p: usize) -> Result<MutatedHomData> {
    h.validate()?;
    let (r, s) = (h.r, h.s);
    if p >= r {
        return Err(TypeError::Dimension(format!("p = {p} must be below r = {r}")));
    }
    let f = h.field;
    let (r2, s2) = (p + 1, r + s - p - 1);
    let g = r - p;
    let t = |l: usize| l + 1 - g;
    let plain = |d: usize| Realized::plain(f, d);

    let mut h_spaces: Vec<Vec<Realized>> = vec![];
    for l in 0..s2 {
        let mut row = vec![];
        for i in 0..r2 {
            let sp = match (i < p, l < g) {
                (true, true) => {
                    let k = p + l;
                    let iota = canonical_embedding(h, k, i);
                    if iota.rank() != h.a[k][i] {
                        return Err(TypeError::NotWellDefined(format!("A[{k}][{i}] does not embed into H[0][{i}] ⊗ H[0][{k}]*")));
                    }
                    Realized::quotient(&iota)?
                }
                (true, false) => plain(h.h[t(l)][i]),
                (false, true) => plain(h.h[0][p + l]),
                (false, false) => plain(h.b[t(l)][0]),
            };
            row.push(sp);
        }
        h_spaces.push(row);
    }
    let mut b_spaces: Vec<Vec<Realized>> = vec![];
    for m in 0..s2 {
        let mut row = vec![];
        for l in 0..s2 {
            let sp = if l > m {
                plain(0)
            } else if m < g {
                plain(h.a[p + m][p + l])
            } else if l >= g {
                plain(h.b[t(m)][t(l)])
            } else {
                Realized::kernel(&h.bh(t(m), 0, p + l))?
            };
            row.push(sp);
        }
        b_spaces.push(row);
    }
    let a_space = |j: usize, i: usize| -> Realized {
        if j < p {
            plain(h.a[j][i])
        } else if i < p {
            plain(h.h[0][i])
        } else {
            plain(1)
        }
    };

    let mut out = HomData {
        field: f,
        r: r2,
        s: s2,
        h: h_spaces.iter().map(|row| row.iter().map(Realized::dim).collect()).collect(),
        a: (0..r2).map(|j| (0..r2).map(|i| if i <= j { a_space(j, i).dim() } else { 0 }).collect()).collect(),
        b: (0..s2).map(|m| (0..s2).map(|l| if l <= m { b_spaces[m][l].dim() } else { 0 }).collect()).collect(),
        comp_ha: Default::default(),
        comp_bh: Default::default(),
        comp_aa: Default::default(),
        comp_bb: Default::default(),
    };

    for k in 0..r2 {
        for j in 0..k {
            for i in 0..j {
                let c = if k < p { h.aa(k, j, i) } else { h.ha(0, j, i) };
                out.comp_aa.insert((k, j, i), c);
            }
        }
    }
    for n in 0..s2 {
        for m in 0..n {
            for l in 0..m {
                let amb = if n < g {
                    h.aa(p + n, p + m, p + l)
                } else if l >= g {
                    h.bb(t(n), t(m), t(l))
                } else if m < g {
                    Matrix::identity(f, h.b[t(n)][0]).kron(&h.ha(0, p + m, p + l))
                } else {
                    h.bb(t(n), t(m), 0).kron(&Matrix::identity(f, h.h[0][p + l]))
                };
                let c = induce(&amb, &b_spaces[n][m], &b_spaces[m][l], &b_spaces[n][l], &format!("B' composition ({n},{m},{l})"))?;
                out.comp_bb.insert((n, m, l), c);
            }
        }
    }
    for l in 0..s2 {
        for j in 0..r2 {
            for i in 0..j {
                let amb = match (j < p, l < g) {
                    (true, true) => {
                        let k = p + l;
                        quotient_precompose(h, &h.ha(0, j, i), h.h[0][i], h.h[0][j], h.h[0][k], h.a[j][i])
                    }
                    (true, false) => h.ha(t(l), j, i),
                    (false, true) => swap_matrix(f, h.h[0][p + l], h.h[0][i]),
                    (false, false) => h.bh(t(l), 0, i),
                };
                let c = induce(&amb, &h_spaces[l][j], &a_space(j, i), &h_spaces[l][i], &format!("H' A' composition ({l},{j},{i})"))?;
                out.comp_ha.insert((l, j, i), c);
            }
        }
    }
    for m in 0..s2 {
        for l in 0..m {
            for i in 0..r2 {
                let amb = if m < g {
                    let (km, kl) = (p + m, p + l);
                    let dual_map = dual_precompose(h, km, kl);
                    if i < p {
                        let hi = h.h[0][i];
                        let (dl, dm, da) = (h.h[0][kl], h.h[0][km], h.a[km][kl]);
                        let mut mat = Matrix::zeros(f, hi * dm, da * hi * dl);
                        for a in 0..da {
                            for hh in 0..hi {
                                for phi in 0..dl {
                                    for x in 0..dm {
                                        let c = dual_map.get(x, a * dl + phi);
                                        if !c.is_zero() {
                                            mat.set(hh * dm + x, a * hi * dl + hh * dl + phi, c.clone());
                                        }
                                    }
                                }
                            }
                        }
                        mat
                    } else {
                        dual_map
                    }
                } else if l >= g {
                    if i < p {
                        h.bh(t(m), t(l), i)
                    } else {
                        h.bb(t(m), t(l), 0)
                    }
                } else {
                    let kl = p + l;
                    let (db, dl) = (h.b[t(m)][0], h.h[0][kl]);
                    if i < p {
                        let hi = h.h[0][i];
                        let c = h.bh(t(m), 0, i);
                        let mut mat = Matrix::zeros(f, h.h[t(m)][i], db * dl * hi * dl);
                        for b in 0..db {
                            for x in 0..dl {
                                for hh in 0..hi {
                                    let col = (b * dl + x) * hi * dl + hh * dl + x;
                                    for z in 0..h.h[t(m)][i] {
                                        mat.set(z, col, c.get(z, b * hi + hh).clone());
                                    }
                                }
                            }
                        }
                        mat
                    } else {
                        let mut mat = Matrix::zeros(f, db, db * dl * dl);
                        for b in 0..db {
                            for x in 0..dl {
                                mat.set(b, (b * dl + x) * dl + x, f.one());
                            }
                        }
                        mat
                    }
                };
                let c = induce(&amb, &b_spaces[m][l], &h_spaces[l][i], &h_spaces[m][i], &format!("B' H' composition ({m},{l},{i})"))?;
                out.comp_bh.insert((m, l, i), c);
            }
        }
    }
    out.validate()?;
    Ok(MutatedHomData { p, data: out, h_spaces, b_spaces })
}

/// `(H[0][j] ⊗ H[0][k]*) ⊗ A[j][i] → H[0][i] ⊗ H[0][k]*`, composing on the first factor.
fn quotient_precompose(h: &HomData, c: &Matrix, hi: usize, hj: usize, hk: usize, da: usize) -> Matrix {
    let mut mat = Matrix::zeros(h.field, hi * hk, hj * hk * da);
    for hh in 0..hj {
        for phi in 0..hk {
            for a in 0..da {
                for out in 0..hi {
                    let v = c.get(out, hh * da + a);
                    if !v.is_zero() {
                        mat.set(out * hk + phi, (hh * hk + phi) * da + a, v.clone());
                    }
                }
            }
        }
    }
    mat
}

/// `A[km][kl] ⊗ H[0][kl]* → H[0][km]*`, `a ⊗ φ ↦ (x ↦ φ(x ∘ a))`.
fn dual_precompose(h: &HomData, km: usize, kl: usize) -> Matrix {
    let (dl, dm, da) = (h.h[0][kl], h.h[0][km], h.a[km][kl]);
    let c = h.ha(0, km, kl);
    Matrix::from_fn(h.field, dm, da * dl, |x, col| {
        let (a, phi) = (col / dl, col % dl);
        c.get(phi, x * da + a).clone()
    })
}

/// Multiplicities of the mutated morphisms: `M'_i = M_i` for `i < p`,
/// `dim M'_p = Σ_{j ≥ p} m_j dim H[0][j] − n_0`, then `N'` lists `M_p, …, M_{r−1}`
/// followed by `N_1, …, N_{s−1}`.
pub fn mutated_multiplicities(h: &HomData, mult: &Multiplicities, p: usize) -> Result<Multiplicities> {
    let total: usize = (p..h.r).map(|j| mult.m[j] * h.h[0][j]).sum();
    if total <= mult.n[0] {
        return Err(TypeError::Dimension(format!("n_1 = {} must be below {total}", mult.n[0])));
    }
    let mut m: Vec<usize> = mult.m[..p].to_vec();
    m.push(total - mult.n[0]);
    let mut n: Vec<usize> = mult.m[p..].to_vec();
    n.extend_from_slice(&mult.n[1..]);
    Ok(Multiplicities { m, n })
}

/// Reads a point of `D(Θ_p)` as a morphism of the mutated type.
pub fn dual_point_to_rs(
    h: &HomData,
    mult: &Multiplicities,
    lay: &Layout,
    dual: &DualSpace,
    mh: &MutatedHomData,
    w: &MorphismPoint,
) -> Result<RsMorphism> {
    let p = lay.p;
    let (r, s) = (h.r, h.s);
    let g = r - p;
    let mm = mutated_multiplicities(h, mult, p)?;
    let d = lay.dims;
    let mut out = RsMorphism::zero(&mh.data, &mm);
    let lifted = &dual.section * &w.phi2;
    for l in 0..(r + s - p - 1) {
        for i in 0..=p {
            let blk = &mut out.blocks[l][i];
            match (i < p, l < g) {
                (true, true) => {
                    let k = p + l;
                    let (hi, hk) = (h.h[0][i], h.h[0][k]);
                    let sp = &mh.h_spaces[l][i];
                    for kk in 0..mult.m[i] {
                        for y in 0..mult.m[k] {
                            let mut amb = Matrix::zeros(h.field, hi * hk, 1);
                            for h1 in 0..hi {
                                for h2 in 0..hk {
                                    let row = lay.n_off[i] + h1 * mult.m[i] + kk;
                                    let col = lay.n_off[k] + h2 * mult.m[k] + y;
                                    amb.set(h1 * hk + h2, 0, lifted.get(row * d.n2 + col, 0).clone());
                                }
                            }
                            let q = &sp.reduce * &amb;
                            for qq in 0..sp.dim() {
                                blk.set(y, qq * mult.m[i] + kk, q.get(qq, 0).clone());
                            }
                        }
                    }
                }
                (true, false) => {
                    let tl = l + 1 - g;
                    for hh in 0..h.h[tl][i] {
                        for kk in 0..mult.m[i] {
                            for y in 0..mult.n[tl] {
                                let idx = lay.m_off[&(i, tl)] + (hh * mult.m[i] + kk) * mult.n[tl] + y;
                                blk.set(y, hh * mult.m[i] + kk, w.phi1.get(idx, 0).clone());
                            }
                        }
                    }
                }
                (false, true) => {
                    let k = p + l;
                    for hh in 0..h.h[0][k] {
                        for x in 0..mm.m[p] {
                            for y in 0..mult.m[k] {
                                let idx = lay.n_off[k] + hh * mult.m[k] + y;
                                blk.set(y, hh * mm.m[p] + x, w.psi2.get(idx, x).clone());
                            }
                        }
                    }
                }
                (false, false) => {
                    let tl = l + 1 - g;
                    for b in 0..h.b[tl][0] {
                        for x in 0..mm.m[p] {
                            for y in 0..mult.n[tl] {
                                let idx = lay.b_off[tl] + b * mult.n[tl] + y;
                                blk.set(y, b * mm.m[p] + x, w.psi1.get(idx, x).clone());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
