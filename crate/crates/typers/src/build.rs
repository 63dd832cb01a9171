//! The abstract morphism space `Θ_p` of type-(r,s) morphisms.
//!
//! Sources `0..p` form the first group and sources `p..r` the second; target
//! `0` plays the role of `Γ ⊗ M` and targets `1..s` form the rest. Coordinates:
//!
//! * `N1`: blocks `i < p`, entries `(h, k)` with `h ∈ H[0][i]`, `k ∈ M_i`;
//! * `N2`: blocks `j ≥ p`, entries `(h, k)`;
//! * `M1`, `M2`: blocks `(i, l)` with `l ≥ 1`, source outer, entries `(h, k, y)`;
//! * `A0`: blocks `(i, j)` with `i < p ≤ j`, `i` outer, entries `(a, k, y)`;
//! * `B0`: blocks `l ≥ 1`, entries `(b, y)` with `b ∈ B[l][0]`, `y ∈ N_l`.

use std::collections::BTreeMap;

use exactfield::{Field, Matrix};
use theta::{Dims, LeftElement, MorphismPoint, PairElement, RightElement, ThetaSpace};

use crate::error::{Result, TypeError};
use crate::hom::HomData;
use crate::morphism::{compose_blocks, Multiplicities, RsMorphism, SourceAut, TargetAut};

/// Offsets of every block inside the coordinate spaces of `Θ_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    /// The splitting index.
    pub p: usize,
    /// Offset of source block `i` in `N1` (`i < p`) or `N2` (`i ≥ p`).
    pub n_off: Vec<usize>,
    /// Offset of block `(i, l)` in `M1` or `M2`, for `l ≥ 1`.
    pub m_off: BTreeMap<(usize, usize), usize>,
    /// Offset of block `(i, j)` in `A0`.
    pub a_off: BTreeMap<(usize, usize), usize>,
    /// Offset of block `l` in `B0`, for `l ≥ 1`.
    pub b_off: Vec<usize>,
    /// Resulting dimensions.
    pub dims: Dims,
}

impl Layout {
    /// Computes the layout, checking `0 ≤ p < r` and the dimension condition on `n_1`.
    pub fn new(h: &HomData, mult: &Multiplicities, p: usize) -> Result<Layout> {
        let (r, s) = (h.r, h.s);
        if p >= r {
            return Err(TypeError::Dimension(format!("p = {p} must be below r = {r}")));
        }
        if mult.m.len() != r || mult.n.len() != s {
            return Err(TypeError::Dimension("multiplicity lists do not match the type".into()));
        }
        let mut n_off = vec![0; r];
        let (mut n1, mut n2) = (0, 0);
        for i in 0..r {
            let d = h.h[0][i] * mult.m[i];
            if i < p {
                n_off[i] = n1;
                n1 += d;
            } else {
                n_off[i] = n2;
                n2 += d;
            }
        }
        let mut m_off = BTreeMap::new();
        let (mut m1, mut m2) = (0, 0);
        for i in 0..r {
            for l in 1..s {
                let d = h.h[l][i] * mult.m[i] * mult.n[l];
                let slot = if i < p { &mut m1 } else { &mut m2 };
                m_off.insert((i, l), *slot);
                *slot += d;
            }
        }
        let mut a_off = BTreeMap::new();
        let mut a0 = 0;
        for i in 0..p {
            for j in p..r {
                a_off.insert((i, j), a0);
                a0 += h.a[j][i] * mult.m[i] * mult.m[j];
            }
        }
        let mut b_off = vec![0; s];
        let mut b0 = 0;
        for l in 1..s {
            b_off[l] = b0;
            b0 += h.b[l][0] * mult.n[l];
        }
        let m = mult.n[0];
        if m >= n2 {
            return Err(TypeError::Dimension(format!("n_1 = {m} must be below dim N2 = {n2}")));
        }
        let dims = Dims { n1, n2, m1, m2, a0, b0, m, n: n2 - m };
        Ok(Layout { p, n_off, m_off, a_off, b_off, dims })
    }

    fn n_index(&self, mult: &Multiplicities, i: usize, hh: usize, k: usize) -> usize {
        self.n_off[i] + hh * mult.m[i] + k
    }

    fn m_index(&self, h: &HomData, mult: &Multiplicities, i: usize, l: usize, hh: usize, k: usize, y: usize) -> usize {
        let _ = h;
        self.m_off[&(i, l)] + (hh * mult.m[i] + k) * mult.n[l] + y
    }

    fn a_index(&self, mult: &Multiplicities, i: usize, j: usize, a: usize, k: usize, y: usize) -> usize {
        self.a_off[&(i, j)] + (a * mult.m[i] + k) * mult.m[j] + y
    }

    fn b_index(&self, mult: &Multiplicities, l: usize, b: usize, y: usize) -> usize {
        self.b_off[l] + b * mult.n[l] + y
    }
}

/// Builds `Θ_p` with its layout.
pub fn build_theta_p_with_layout(h: &HomData, mult: &Multiplicities, p: usize) -> Result<(ThetaSpace, Layout)> {
    let lay = Layout::new(h, mult, p)?;
    let d = lay.dims;
    let f = h.field;
    let (r, s) = (h.r, h.s);
    let mut nu = Matrix::zeros(f, d.n1, d.n2 * d.a0);
    let mut mu = Matrix::zeros(f, d.m1, d.m2 * d.a0);
    for i in 0..p {
        for j in p..r {
            let c0 = h.ha(0, j, i);
            for h1 in 0..h.h[0][j] {
                for a in 0..h.a[j][i] {
                    for hp in 0..h.h[0][i] {
                        let c = c0.get(hp, h1 * h.a[j][i] + a);
                        if c.is_zero() {
                            continue;
                        }
                        for k in 0..mult.m[i] {
                            for y in 0..mult.m[j] {
                                let row = lay.n_index(mult, i, hp, k);
                                let col = lay.n_index(mult, j, h1, y) * d.a0 + lay.a_index(mult, i, j, a, k, y);
                                nu.add_at(row, col, c);
                            }
                        }
                    }
                }
            }
            for l in 1..s {
                let cl = h.ha(l, j, i);
                for h1 in 0..h.h[l][j] {
                    for a in 0..h.a[j][i] {
                        for hp in 0..h.h[l][i] {
                            let c = cl.get(hp, h1 * h.a[j][i] + a);
                            if c.is_zero() {
                                continue;
                            }
                            for k in 0..mult.m[i] {
                                for y in 0..mult.m[j] {
                                    for z in 0..mult.n[l] {
                                        let row = lay.m_index(h, mult, i, l, hp, k, z);
                                        let col = lay.m_index(h, mult, j, l, h1, y, z) * d.a0 + lay.a_index(mult, i, j, a, k, y);
                                        mu.add_at(row, col, c);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut rho1 = Matrix::zeros(f, d.m1, d.b0 * d.n1);
    let mut rho2 = Matrix::zeros(f, d.m2, d.b0 * d.n2);
    for l in 1..s {
        for i in 0..r {
            let c0 = h.bh(l, 0, i);
            let (rho, ncols) = if i < p { (&mut rho1, d.n1) } else { (&mut rho2, d.n2) };
            for b in 0..h.b[l][0] {
                for h1 in 0..h.h[0][i] {
                    for hp in 0..h.h[l][i] {
                        let c = c0.get(hp, b * h.h[0][i] + h1);
                        if c.is_zero() {
                            continue;
                        }
                        for k in 0..mult.m[i] {
                            for z in 0..mult.n[l] {
                                let row = lay.m_index(h, mult, i, l, hp, k, z);
                                let col = lay.b_index(mult, l, b, z) * ncols + lay.n_index(mult, i, h1, k);
                                rho.add_at(row, col, c);
                            }
                        }
                    }
                }
            }
        }
    }
    let t = ThetaSpace::new(f, d, rho1, rho2, mu, nu)?;
    Ok((t, lay))
}

/// Builds `Θ_p`.
pub fn build_theta_p(h: &HomData, mult: &Multiplicities, p: usize) -> Result<ThetaSpace> {
    Ok(build_theta_p_with_layout(h, mult, p)?.0)
}

/// Converts a type-(r,s) morphism into a point of `Θ_p`.
pub fn rs_to_point(h: &HomData, mult: &Multiplicities, lay: &Layout, w: &RsMorphism) -> Result<MorphismPoint> {
    w.check(h, mult)?;
    let d = lay.dims;
    let f = h.field;
    let mut psi1 = Matrix::zeros(f, d.n1, d.m);
    let mut psi2 = Matrix::zeros(f, d.n2, d.m);
    let mut phi1 = Matrix::zeros(f, d.m1, 1);
    let mut phi2 = Matrix::zeros(f, d.m2, 1);
    for i in 0..h.r {
        let psi = if i < lay.p { &mut psi1 } else { &mut psi2 };
        psi.set_block(lay.n_off[i], 0, &w.blocks[0][i].transpose());
        for l in 1..h.s {
            let phi = if i < lay.p { &mut phi1 } else { &mut phi2 };
            let blk = &w.blocks[l][i];
            for hh in 0..h.h[l][i] {
                for k in 0..mult.m[i] {
                    for y in 0..mult.n[l] {
                        phi.set(lay.m_index(h, mult, i, l, hh, k, y), 0, blk.get(y, hh * mult.m[i] + k).clone());
                    }
                }
            }
        }
    }
    Ok(MorphismPoint { psi1, psi2, phi1, phi2 })
}

/// Converts a point of `Θ_p` back into a type-(r,s) morphism.
pub fn point_to_rs(h: &HomData, mult: &Multiplicities, lay: &Layout, w: &MorphismPoint) -> RsMorphism {
    let mut out = RsMorphism::zero(h, mult);
    for i in 0..h.r {
        let psi = if i < lay.p { &w.psi1 } else { &w.psi2 };
        out.blocks[0][i] = psi.block(lay.n_off[i], 0, h.h[0][i] * mult.m[i], mult.n[0]).transpose();
        for l in 1..h.s {
            let phi = if i < lay.p { &w.phi1 } else { &w.phi2 };
            let blk = &mut out.blocks[l][i];
            for hh in 0..h.h[l][i] {
                for k in 0..mult.m[i] {
                    for y in 0..mult.n[l] {
                        blk.set(y, hh * mult.m[i] + k, phi.get(lay.m_index(h, mult, i, l, hh, k, y), 0).clone());
                    }
                }
            }
        }
    }
    out
}

/// Membership in `W⁰_p`: the map induced by the blocks `θ_{1j}`, `j ≥ p`, onto `N_1` is surjective.
pub fn in_w0_p(h: &HomData, mult: &Multiplicities, p: usize, w: &RsMorphism) -> Result<bool> {
    w.check(h, mult)?;
    if p >= h.r {
        return Err(TypeError::Dimension(format!("p = {p} must be below r = {}", h.r)));
    }
    let f = h.field;
    let parts: Vec<Matrix> = (p..h.r).map(|j| w.blocks[0][j].clone()).collect();
    let stacked = Matrix::hcat(f, mult.n[0], &parts);
    Ok(stacked.rank() == mult.n[0])
}

fn linear_map(f: Field, rows: usize, cols: usize, image: impl Fn(usize) -> Matrix) -> Matrix {
    let mut out = Matrix::zeros(f, rows, cols);
    for c in 0..cols {
        out.set_block(0, c, &image(c));
    }
    out
}

/// Converts `(g, f)` acting by `w ↦ f ∘ w ∘ g` into an element of the group of `Θ_p`.
pub fn group_to_pair(
    h: &HomData,
    mult: &Multiplicities,
    lay: &Layout,
    t: &ThetaSpace,
    g: &SourceAut,
    tf: &TargetAut,
) -> Result<PairElement> {
    let f = h.field;
    let d = lay.dims;
    let p = lay.p;
    let (r, s) = (h.r, h.s);
    let restrict_source = |keep: &dyn Fn(usize, usize) -> bool| {
        let mut gg = SourceAut::identity(h, mult);
        for j in 0..r {
            for i in 0..=j {
                if keep(j, i) {
                    gg.blocks[j][i] = g.blocks[j][i].clone();
                }
            }
        }
        gg
    };
    let g11 = restrict_source(&|j, i| j < p && i < p);
    let g22 = restrict_source(&|j, i| j >= p && i >= p);
    let mut f22 = TargetAut::identity(h, mult);
    for m in 1..s {
        for l in 1..=m {
            f22.blocks[m][l] = tf.blocks[m][l].clone();
        }
    }
    let id_t = TargetAut::identity(h, mult);
    let id_s = SourceAut::identity(h, mult);
    let basis_point = |space: usize, idx: usize| -> MorphismPoint {
        let mut pt = MorphismPoint::zero(t);
        match space {
            0 => pt.psi1.set(idx, 0, f.one()),
            1 => pt.psi2.set(idx, 0, f.one()),
            2 => pt.phi1.set(idx, 0, f.one()),
            _ => pt.phi2.set(idx, 0, f.one()),
        }
        pt
    };
    let transform = |pt: &MorphismPoint, gg: &SourceAut, ff: &TargetAut| -> Result<MorphismPoint> {
        let w = point_to_rs(h, mult, lay, pt);
        rs_to_point(h, mult, lay, &w.act(h, mult, gg, ff))
    };
    let first_col = |space: usize, dim: usize, gg: &SourceAut, ff: &TargetAut| -> Result<Matrix> {
        let mut out = Matrix::zeros(f, dim, dim);
        for c in 0..dim {
            let img = transform(&basis_point(space, c), gg, ff)?;
            let col = match space {
                0 => img.psi1.col(0),
                1 => img.psi2.col(0),
                2 => img.phi1,
                _ => img.phi2,
            };
            out.set_block(0, c, &col);
        }
        Ok(out)
    };
    let r_n1 = if d.m > 0 { first_col(0, d.n1, &g11, &id_t)? } else { Matrix::identity(f, d.n1) };
    let b_n2 = if d.m > 0 { first_col(1, d.n2, &g22, &id_t)? } else { Matrix::identity(f, d.n2) };
    let r_m1 = first_col(2, d.m1, &g11, &id_t)?;
    let b_m2 = first_col(3, d.m2, &g22, &id_t)?;
    let l_m1 = first_col(2, d.m1, &id_s, &f22)?;
    let l_m2 = first_col(3, d.m2, &id_s, &f22)?;

    let a_vec = |alpha: &Matrix, i: usize, j: usize| -> Matrix {
        let mut v = Matrix::zeros(f, d.a0, 1);
        for a in 0..h.a[j][i] {
            for k in 0..mult.m[i] {
                for y in 0..mult.m[j] {
                    v.set(lay.a_index(mult, i, j, a, k, y), 0, alpha.get(y, a * mult.m[i] + k).clone());
                }
            }
        }
        v
    };
    let a_block = |c: usize| -> (usize, usize, Matrix) {
        let ((i, j), off) = lay.a_off.iter().filter(|(&(i, j), &o)| o <= c && h.a[j][i] * mult.m[i] * mult.m[j] > 0).max_by_key(|(_, &o)| o).map(|(k, o)| (*k, *o)).expect("index in range");
        let mut blk = Matrix::zeros(f, mult.m[j], h.a[j][i] * mult.m[i]);
        let local = c - off;
        let (ak, y) = (local / mult.m[j], local % mult.m[j]);
        blk.set(y, ak, f.one());
        (i, j, blk)
    };
    let r_a0 = linear_map(f, d.a0, d.a0, |c| {
        let (i, j, blk) = a_block(c);
        let mut v = Matrix::zeros(f, d.a0, 1);
        for i2 in 0..=i {
            let img = compose_blocks(&blk, &g11.blocks[i][i2], &h.aa(j, i, i2), mult.m[i2]);
            v = &v + &a_vec(&img, i2, j);
        }
        v
    });
    let b_a0 = linear_map(f, d.a0, d.a0, |c| {
        let (i, j, blk) = a_block(c);
        let mut v = Matrix::zeros(f, d.a0, 1);
        for j2 in j..r {
            let img = compose_blocks(&g22.blocks[j2][j], &blk, &h.aa(j2, j, i), mult.m[i]);
            v = &v + &a_vec(&img, i, j2);
        }
        v
    });
    let mut alpha0 = Matrix::zeros(f, d.a0, 1);
    for i in 0..p {
        for j in p..r {
            alpha0 = &alpha0 + &a_vec(&g.blocks[j][i], i, j);
        }
    }
    let mut beta = Matrix::zeros(f, d.b0, d.m);
    for l in 1..s {
        for b in 0..h.b[l][0] {
            for yl in 0..mult.n[l] {
                for y1 in 0..mult.n[0] {
                    beta.set(lay.b_index(mult, l, b, yl), y1, tf.blocks[l][0].get(yl, b * mult.n[0] + y1).clone());
                }
            }
        }
    }
    let l_b0 = linear_map(f, d.b0, d.b0, |c| {
        let l = (1..s).filter(|&l| lay.b_off[l] <= c && h.b[l][0] * mult.n[l] > 0).last().expect("index in range");
        let local = c - lay.b_off[l];
        let (b, y) = (local / mult.n[l], local % mult.n[l]);
        let mut v = Matrix::zeros(f, d.b0, 1);
        for m in l..s {
            let comp = h.bb(m, l, 0);
            for bm in 0..h.b[m][0] {
                for bl in 0..h.b[m][l] {
                    let cc = comp.get(bm, bl * h.b[l][0] + b);
                    if cc.is_zero() {
                        continue;
                    }
                    for z in 0..mult.n[m] {
                        let fv = f22.blocks[m][l].get(z, bl * mult.n[l] + y);
                        if !fv.is_zero() {
                            v.add_at(lay.b_index(mult, m, bm, z), 0, &(fv * cc));
                        }
                    }
                }
            }
        }
        v
    });
    let right = RightElement { r_n1, r_m1, r_a0, alpha0, b_n2, b_m2, b_a0 };
    let left = LeftElement { g_m: tf.blocks[0][0].clone(), beta, l_m1, l_m2, l_b0 };
    Ok(PairElement { right, left })
}
