//! Morphisms of type `(r,s)` and the automorphism groups acting on them.
//!
//! A block `θ_li ∈ H[l][i] ⊗ M_i* ⊗ N_l` is stored as an `n_l x (h·m_i)`
//! matrix with entry `[y][(h, k)]`. Blocks of source automorphisms are
//! `m_j x (a·m_i)` matrices in `A[j][i] ⊗ M_i* ⊗ M_j`, and blocks of target
//! automorphisms are `n_m x (b·n_l)` matrices in `B[m][l] ⊗ N_l* ⊗ N_m`.

use exactfield::{Field, Matrix, Scalar};
use rand::Rng;

use crate::error::{Result, TypeError};
use crate::hom::HomData;

/// Composes `x ∈ D1 ⊗ B* ⊗ C` (a `c x (d1·b)` matrix) after
/// `y ∈ D2 ⊗ A* ⊗ B` (a `b x (d2·a)` matrix) through `comp: D1 ⊗ D2 → D3`,
/// giving a `c x (d3·a)` matrix. The dimension `a` is passed explicitly.
pub fn compose_blocks(x: &Matrix, y: &Matrix, comp: &Matrix, a: usize) -> Matrix {
    let f = x.field();
    let c = x.rows();
    let b = y.rows();
    let d3 = comp.rows();
    let d1 = if b == 0 { 0 } else { x.cols() / b };
    let d2 = if a == 0 { 0 } else { y.cols() / a };
    let mut out = Matrix::zeros(f, c, d3 * a);
    if d1 == 0 || d2 == 0 || c == 0 {
        return out;
    }
    for h1 in 0..d1 {
        for h2 in 0..d2 {
            let col = h1 * d2 + h2;
            let targets: Vec<(usize, Scalar)> =
                (0..d3).filter(|&h3| !comp.get(h3, col).is_zero()).map(|h3| (h3, comp.get(h3, col).clone())).collect();
            if targets.is_empty() {
                continue;
            }
            for yy in 0..c {
                for k in 0..b {
                    let xv = x.get(yy, h1 * b + k);
                    if xv.is_zero() {
                        continue;
                    }
                    for xx in 0..a {
                        let yv = y.get(k, h2 * a + xx);
                        if yv.is_zero() {
                            continue;
                        }
                        let prod = xv * yv;
                        for (h3, cv) in &targets {
                            out.add_at(yy, h3 * a + xx, &(&prod * cv));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Multiplicities `m_1, …, m_r` of the sources and `n_1, …, n_s` of the targets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Multiplicities {
    /// Source multiplicities.
    pub m: Vec<usize>,
    /// Target multiplicities.
    pub n: Vec<usize>,
}

impl Multiplicities {
    /// Builds from the two lists.
    pub fn new(m: &[usize], n: &[usize]) -> Multiplicities {
        Multiplicities { m: m.to_vec(), n: n.to_vec() }
    }

    /// Multiplicities of the transposed morphisms.
    pub fn transpose(&self) -> Multiplicities {
        Multiplicities {
            m: self.n.iter().rev().copied().collect(),
            n: self.m.iter().rev().copied().collect(),
        }
    }
}

/// A morphism `⊕ E_i ⊗ M_i → ⊕ F_l ⊗ N_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RsMorphism {
    /// `blocks[l][i]` is the component `θ_li`.
    pub blocks: Vec<Vec<Matrix>>,
}

/// An automorphism of `⊕ E_i ⊗ M_i`, lower triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceAut {
    /// `blocks[j][i]` for `i ≤ j`; the diagonal blocks are invertible `m_i x m_i` matrices.
    pub blocks: Vec<Vec<Matrix>>,
}

/// An automorphism of `⊕ F_l ⊗ N_l`, lower triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetAut {
    /// `blocks[m][l]` for `l ≤ m`; the diagonal blocks are invertible `n_l x n_l` matrices.
    pub blocks: Vec<Vec<Matrix>>,
}

fn check(cond: bool, what: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(TypeError::Dimension(what.into()))
    }
}

impl RsMorphism {
    /// The zero morphism.
    pub fn zero(h: &HomData, mult: &Multiplicities) -> RsMorphism {
        RsMorphism {
            blocks: (0..h.s)
                .map(|l| (0..h.r).map(|i| Matrix::zeros(h.field, mult.n[l], h.h[l][i] * mult.m[i])).collect())
                .collect(),
        }
    }

    /// A random morphism with entries in `[-bound, bound]`.
    pub fn random(h: &HomData, mult: &Multiplicities, bound: i64, rng: &mut impl Rng) -> RsMorphism {
        let f = h.field;
        RsMorphism {
            blocks: (0..h.s)
                .map(|l| {
                    (0..h.r)
                        .map(|i| Matrix::from_fn(f, mult.n[l], h.h[l][i] * mult.m[i], |_, _| f.from_i64(rng.gen_range(-bound..=bound))))
                        .collect()
                })
                .collect(),
        }
    }

    /// Checks block shapes.
    pub fn check(&self, h: &HomData, mult: &Multiplicities) -> Result<()> {
        check(self.blocks.len() == h.s, "wrong number of target blocks")?;
        for l in 0..h.s {
            check(self.blocks[l].len() == h.r, "wrong number of source blocks")?;
            for i in 0..h.r {
                check(
                    self.blocks[l][i].shape() == (mult.n[l], h.h[l][i] * mult.m[i]),
                    format!("block ({l},{i}) has the wrong shape"),
                )?;
            }
        }
        Ok(())
    }

    /// `f ∘ w ∘ g`.
    pub fn act(&self, h: &HomData, mult: &Multiplicities, g: &SourceAut, f: &TargetAut) -> RsMorphism {
        let (r, s) = (h.r, h.s);
        let mut wg = self.blocks.clone();
        for l in 0..s {
            for i in 0..r {
                let mut acc: Option<Matrix> = None;
                for j in i..r {
                    let term = compose_blocks(&self.blocks[l][j], &g.blocks[j][i], &h.ha(l, j, i), mult.m[i]);
                    acc = Some(match acc {
                        None => term,
                        Some(a) => &a + &term,
                    });
                }
                wg[l][i] = acc.expect("nonempty range");
            }
        }
        let mut out = wg.clone();
        for m in 0..s {
            for i in 0..r {
                let mut acc: Option<Matrix> = None;
                for l in 0..=m {
                    let term = compose_blocks(&f.blocks[m][l], &wg[l][i], &h.bh(m, l, i), mult.m[i]);
                    acc = Some(match acc {
                        None => term,
                        Some(a) => &a + &term,
                    });
                }
                out[m][i] = acc.expect("nonempty range");
            }
        }
        RsMorphism { blocks: out }
    }

    /// The transposed morphism over [`HomData::transpose`].
    pub fn transpose(&self, h: &HomData, mult: &Multiplicities) -> RsMorphism {
        let (r, s) = (h.r, h.s);
        let f = h.field;
        let blocks = (0..r)
            .map(|l| {
                (0..s)
                    .map(|k| {
                        let (ls, is) = (s - 1 - k, r - 1 - l);
                        let src = &self.blocks[ls][is];
                        let (dh, mi, nl) = (h.h[ls][is], mult.m[is], mult.n[ls]);
                        Matrix::from_fn(f, mi, dh * nl, |x, col| {
                            let (hh, y) = (col / nl.max(1), col % nl.max(1));
                            src.get(y, hh * mi + x).clone()
                        })
                    })
                    .collect()
            })
            .collect();
        RsMorphism { blocks }
    }
}

fn compose_triangular(
    field: Field,
    n: usize,
    x: &[Vec<Matrix>],
    y: &[Vec<Matrix>],
    comp: impl Fn(usize, usize, usize) -> Matrix,
    dims: impl Fn(usize, usize) -> (usize, usize),
    inner: impl Fn(usize) -> usize,
) -> Vec<Vec<Matrix>> {
    let mut out = vec![vec![Matrix::zeros(field, 0, 0); n]; n];
    for k in 0..n {
        for i in 0..=k {
            let (rows, cols) = dims(k, i);
            let mut acc = Matrix::zeros(field, rows, cols);
            for j in i..=k {
                acc = &acc + &compose_blocks(&x[k][j], &y[j][i], &comp(k, j, i), inner(i));
            }
            out[k][i] = acc;
        }
    }
    out
}

impl SourceAut {
    /// The identity.
    pub fn identity(h: &HomData, mult: &Multiplicities) -> SourceAut {
        let f = h.field;
        SourceAut {
            blocks: (0..h.r)
                .map(|j| {
                    (0..h.r)
                        .map(|i| {
                            if i == j {
                                Matrix::identity(f, mult.m[i])
                            } else if i < j {
                                Matrix::zeros(f, mult.m[j], h.a[j][i] * mult.m[i])
                            } else {
                                Matrix::zeros(f, 0, 0)
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// A random automorphism.
    pub fn random(h: &HomData, mult: &Multiplicities, bound: i64, rng: &mut impl Rng) -> SourceAut {
        let f = h.field;
        let mut g = SourceAut::identity(h, mult);
        for j in 0..h.r {
            g.blocks[j][j] = random_invertible(f, mult.m[j], bound, rng);
            for i in 0..j {
                g.blocks[j][i] = Matrix::from_fn(f, mult.m[j], h.a[j][i] * mult.m[i], |_, _| f.from_i64(rng.gen_range(-bound..=bound)));
            }
        }
        g
    }

    /// The composite `self ∘ other`.
    pub fn compose(&self, h: &HomData, mult: &Multiplicities, other: &SourceAut) -> SourceAut {
        SourceAut {
            blocks: compose_triangular(
                h.field,
                h.r,
                &self.blocks,
                &other.blocks,
                |k, j, i| h.aa(k, j, i),
                |k, i| (mult.m[k], h.a[k][i] * mult.m[i]),
                |i| mult.m[i],
            ),
        }
    }

    /// The inverse, by forward substitution.
    pub fn inverse(&self, h: &HomData, mult: &Multiplicities) -> Result<SourceAut> {
        let mut inv = SourceAut::identity(h, mult);
        for i in 0..h.r {
            inv.blocks[i][i] = self.blocks[i][i].inverse()?;
        }
        for k in 0..h.r {
            for i in (0..k).rev() {
                let mut acc = Matrix::zeros(h.field, mult.m[k], h.a[k][i] * mult.m[i]);
                for j in i..k {
                    acc = &acc + &compose_blocks(&self.blocks[k][j], &inv.blocks[j][i], &h.aa(k, j, i), mult.m[i]);
                }
                let neg = -&acc;
                inv.blocks[k][i] = compose_blocks(&inv.blocks[k][k], &neg, &h.aa(k, k, i), mult.m[i]);
            }
        }
        Ok(inv)
    }

    /// Whether every off-diagonal block vanishes.
    pub fn is_reductive(&self) -> bool {
        (0..self.blocks.len()).all(|j| (0..j).all(|i| self.blocks[j][i].is_zero()))
    }
}

impl TargetAut {
    /// The identity.
    pub fn identity(h: &HomData, mult: &Multiplicities) -> TargetAut {
        let f = h.field;
        TargetAut {
            blocks: (0..h.s)
                .map(|m| {
                    (0..h.s)
                        .map(|l| {
                            if l == m {
                                Matrix::identity(f, mult.n[l])
                            } else if l < m {
                                Matrix::zeros(f, mult.n[m], h.b[m][l] * mult.n[l])
                            } else {
                                Matrix::zeros(f, 0, 0)
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// A random automorphism.
    pub fn random(h: &HomData, mult: &Multiplicities, bound: i64, rng: &mut impl Rng) -> TargetAut {
        let f = h.field;
        let mut g = TargetAut::identity(h, mult);
        for m in 0..h.s {
            g.blocks[m][m] = random_invertible(f, mult.n[m], bound, rng);
            for l in 0..m {
                g.blocks[m][l] = Matrix::from_fn(f, mult.n[m], h.b[m][l] * mult.n[l], |_, _| f.from_i64(rng.gen_range(-bound..=bound)));
            }
        }
        g
    }

    /// The composite `self ∘ other`.
    pub fn compose(&self, h: &HomData, mult: &Multiplicities, other: &TargetAut) -> TargetAut {
        TargetAut {
            blocks: compose_triangular(
                h.field,
                h.s,
                &self.blocks,
                &other.blocks,
                |n, m, l| h.bb(n, m, l),
                |n, l| (mult.n[n], h.b[n][l] * mult.n[l]),
                |l| mult.n[l],
            ),
        }
    }

    /// The inverse, by forward substitution.
    pub fn inverse(&self, h: &HomData, mult: &Multiplicities) -> Result<TargetAut> {
        let mut inv = TargetAut::identity(h, mult);
        for l in 0..h.s {
            inv.blocks[l][l] = self.blocks[l][l].inverse()?;
        }
        for n in 0..h.s {
            for l in (0..n).rev() {
                let mut acc = Matrix::zeros(h.field, mult.n[n], h.b[n][l] * mult.n[l]);
                for m in l..n {
                    acc = &acc + &compose_blocks(&self.blocks[n][m], &inv.blocks[m][l], &h.bb(n, m, l), mult.n[l]);
                }
                let neg = -&acc;
                inv.blocks[n][l] = compose_blocks(&inv.blocks[n][n], &neg, &h.bb(n, n, l), mult.n[l]);
            }
        }
        Ok(inv)
    }

    /// Whether every off-diagonal block vanishes.
    pub fn is_reductive(&self) -> bool {
        (0..self.blocks.len()).all(|m| (0..m).all(|l| self.blocks[m][l].is_zero()))
    }
}

fn random_invertible(f: Field, n: usize, bound: i64, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(f, n, n, |_, _| f.from_i64(rng.gen_range(-bound..=bound)));
        if m.is_invertible() {
            return m;
        }
    }
}
