//! Transport of group elements through chart mutations.
//!
//! For a generator `g` of `G` and a point `w` in a chart domain, the functions
//! here build an element `γ` of the dual group with
//! `λ1(g·w) = γ · λ0(w)`, where `λ0` and `λ1` are chart mutations.
//! Only elements of type `B` can move a point between chart domains, so every
//! other generator is transported within a single chart.

use exactfield::Matrix;
use theta::{act_left, act_right, Chart, LeftElement, MorphismPoint, PairElement, RightElement, ThetaSpace};

use crate::dual::DualSpace;
use crate::error::{MutationError, Result};
use crate::mutate::chart_splitting;

/// A generator of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// An element `(r, 0, 1)` of `G_R`.
    R(RightElement),
    /// The unipotent element `(1, α0, 1)`.
    Alpha0(Matrix),
    /// An element `(1, 0, b)` of `G_R`.
    B(RightElement),
    /// The element `(g_M, 0, 1)` of `G_L`.
    GlM(Matrix),
    /// The unipotent element `(1, β, 1)`.
    Beta(Matrix),
    /// An element `(1, 0, ℓ)` of `G_L`.
    L(LeftElement),
}

impl Generator {
    /// The generator as an element of `G`.
    pub fn as_pair(&self, t: &ThetaSpace) -> PairElement {
        let mut p = PairElement::identity(t);
        match self {
            Generator::R(r) => p.right = r.r_part(t),
            Generator::Alpha0(a) => p.right = RightElement::unipotent(t, a.clone()),
            Generator::B(b) => p.right = b.b_part(t),
            Generator::GlM(g) => p.left = LeftElement::gl_m(t, g.clone()),
            Generator::Beta(b) => p.left = LeftElement::unipotent(t, b.clone()),
            Generator::L(l) => p.left = l.l_part(t),
        }
        p
    }

    /// Applies the generator to a point.
    pub fn act(&self, t: &ThetaSpace, w: &MorphismPoint) -> MorphismPoint {
        let p = self.as_pair(t);
        act_left(t, &act_right(t, w, &p.right), &p.left)
    }
}

/// Writes `g` as the sequence `r, α0, b, β̃, ℓ, g_M` of generators, applied in that order.
pub fn decompose(t: &ThetaSpace, g: &PairElement) -> Result<Vec<Generator>> {
    let l_b0_inv = g.left.l_b0.inverse()?;
    Ok(vec![
        Generator::R(g.right.r_part(t)),
        Generator::Alpha0(g.right.alpha0.clone()),
        Generator::B(g.right.b_part(t)),
        Generator::Beta(&l_b0_inv * &g.left.beta),
        Generator::L(g.left.l_part(t)),
        Generator::GlM(g.left.g_m.clone()),
    ])
}

/// The element of `L'` induced by `r ∈ R`.
pub fn dual_left_from_r(dual: &DualSpace, t: &ThetaSpace, r: &RightElement) -> LeftElement {
    let f = t.field;
    let lift = r.r_n1.kron(&Matrix::identity(f, t.dims.n2));
    LeftElement {
        l_m1: r.r_m1.clone(),
        l_m2: &(&dual.projection * &lift) * &dual.section,
        l_b0: r.r_n1.clone(),
        ..LeftElement::identity(&dual.theta)
    }
}

/// The element of `R'` induced by `ℓ ∈ L`.
pub fn dual_right_from_l(dual: &DualSpace, t: &ThetaSpace, l: &LeftElement) -> RightElement {
    let f = t.field;
    let lift = l.l_b0.kron(&Matrix::identity(f, t.dims.n2));
    RightElement {
        r_n1: l.l_b0.clone(),
        r_m1: l.l_m1.clone(),
        r_a0: &(&dual.kernel_coords * &lift) * &dual.kernel_rho2,
        ..RightElement::identity(&dual.theta)
    }
}

/// The element of `B'` induced by `b ∈ B`.
pub fn dual_right_from_b(dual: &DualSpace, t: &ThetaSpace, b: &RightElement) -> RightElement {
    let (f, d) = (t.field, t.dims);
    let bt = b.b_n2.transpose();
    let on_m2 = Matrix::identity(f, d.n1).kron(&bt);
    let on_a0 = Matrix::identity(f, d.b0).kron(&b.b_n2);
    RightElement {
        b_n2: bt,
        b_m2: &(&dual.projection * &on_m2) * &dual.section,
        b_a0: &(&dual.kernel_coords * &on_a0) * &dual.kernel_rho2,
        ..RightElement::identity(&dual.theta)
    }
}

/// Transports one generator through chart mutations.
///
/// `ch0` must contain `w`. For a generator of type `B`, `ch1` must contain
/// `g·w`; for every other generator `ch1` is ignored and `ch0` is used on both sides.
pub fn generator_transport(
    dual: &DualSpace,
    t: &ThetaSpace,
    g: &Generator,
    w: &MorphismPoint,
    ch0: &Chart,
    ch1: &Chart,
) -> Result<PairElement> {
    let td = &dual.theta;
    let sp0 = chart_splitting(t, ch0, w)?;
    let gw = g.act(t, w);
    let mut out = PairElement::identity(td);
    match g {
        Generator::R(r) => out.left = dual_left_from_r(dual, t, r),
        Generator::Alpha0(a) => {
            let beta = -&(&t.nu_bar(a) * &sp0.q_s.transpose());
            out.left = LeftElement::unipotent(td, beta);
        }
        Generator::GlM(_) => {}
        Generator::L(l) => {
            let u0 = chart_splitting(t, ch0, &gw)?.choice.u;
            let moved = &l.l_b0 * &sp0.choice.u;
            out.right = RightElement {
                alpha0: dual.a0_coords(&(&u0 - &moved))?,
                ..dual_right_from_l(dual, t, l)
            };
        }
        Generator::Beta(beta) => {
            let u0 = chart_splitting(t, ch0, &gw)?.choice.u;
            let diff = &(&u0 - &sp0.choice.u) + &(beta * &w.psi2.transpose());
            out.right = RightElement::unipotent(td, dual.a0_coords(&diff)?);
        }
        Generator::B(b) => {
            let sp1 = chart_splitting(t, ch1, &gw)?;
            let b_inv = b.inverse()?;
            let b_inv_t = b_inv.b_n2.transpose();
            let moved_kernel = &b_inv_t * &sp0.choice.kernel;
            let transition = sp1
                .choice
                .kernel
                .solve(&moved_kernel)
                .map_err(|_| MutationError::Unsupported("kernel not carried to kernel".into()))?;
            let theta_m = transition.inverse()?.transpose();
            let lambda = &(&b.b_n2.transpose() * &sp1.r) - &sp0.r;
            let big_lambda = &sp0.q_s * &lambda;
            let beta = &w.psi1 * &big_lambda.transpose();
            let a = &(&sp1.choice.u * &b_inv_t) - &sp0.choice.u;
            out.right = RightElement {
                alpha0: dual.a0_coords(&a)?,
                ..dual_right_from_b(dual, t, &b_inv)
            };
            out.left = LeftElement {
                g_m: theta_m,
                ..LeftElement::unipotent(td, beta)
            };
        }
    }
    Ok(out)
}

/// Transports a general element of `G` by composing generator transports.
///
/// `ch0` must contain `w` and `ch1` must contain `g·w`. The result `γ`
/// satisfies `λ_{ch1}(g·w) = γ · λ_{ch0}(w)`.
pub fn transport(
    dual: &DualSpace,
    t: &ThetaSpace,
    g: &PairElement,
    w: &MorphismPoint,
    ch0: &Chart,
    ch1: &Chart,
) -> Result<PairElement> {
    let mut total = PairElement::identity(&dual.theta);
    let mut cur = w.clone();
    let mut chart = ch0;
    for gen in decompose(t, g)? {
        let next_chart = if matches!(gen, Generator::B(_)) { ch1 } else { chart };
        let step = generator_transport(dual, t, &gen, &cur, chart, next_chart)?;
        total = step.compose(&total);
        cur = gen.act(t, &cur);
        chart = next_chart;
    }
    Ok(total)
}
