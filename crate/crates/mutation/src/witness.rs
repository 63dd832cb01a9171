//! Explicit group elements relating different mutations of the same point.

use exactfield::Matrix;
use theta::{LeftElement, MorphismPoint, PairElement, RightElement, ThetaSpace};

use crate::dual::{DoubleDual, DualSpace};
use crate::error::{MutationError, Result};
use crate::mutate::{mutate, MutationChoice};

/// The element of `H' × GL(M')` carrying the mutation for `c1` to the one for `c2`.
///
/// Both choices must be valid for the same point. The result is an element of
/// the group of the dual space with `r' = 1`, `b' = 1` and `ℓ' = 1`.
pub fn choice_change_element(dual: &DualSpace, c1: &MutationChoice, c2: &MutationChoice) -> Result<PairElement> {
    let td = &dual.theta;
    let alpha = dual.a0_coords(&(&c2.u - &c1.u))?;
    let t = c1
        .kernel
        .solve(&c2.kernel)
        .map_err(|_| MutationError::BadChoice("kernels span different subspaces".into()))?;
    let beta = c1
        .kernel
        .solve(&(&c2.v - &c1.v).transpose())
        .map_err(|_| MutationError::BadChoice("v differences do not vanish on the image".into()))?
        .transpose();
    Ok(PairElement {
        right: RightElement::unipotent(td, alpha),
        left: LeftElement {
            g_m: t.transpose(),
            ..LeftElement::unipotent(td, beta)
        },
    })
}

/// The choice for `w·(1, α0, 1)` that reproduces the mutation for `c` at `w`.
pub fn choice_after_alpha0(t: &ThetaSpace, c: &MutationChoice, alpha0: &Matrix) -> MutationChoice {
    MutationChoice {
        u: c.u.clone(),
        v: &c.v + &t.nu_bar(alpha0),
        kernel: c.kernel.clone(),
    }
}

/// The choice for `(1, β, 1)·w` that reproduces the mutation for `c` at `w`.
pub fn choice_after_beta(w: &MorphismPoint, c: &MutationChoice, beta: &Matrix) -> MutationChoice {
    MutationChoice {
        u: &c.u - &(beta * &w.psi2.transpose()),
        v: c.v.clone(),
        kernel: c.kernel.clone(),
    }
}

/// The choice `(-v, u, ψ2)` for mutating `z(w)` back, valid over the dual space.
pub fn return_choice(w: &MorphismPoint, c: &MutationChoice) -> MutationChoice {
    MutationChoice {
        u: -&c.v,
        v: c.u.clone(),
        kernel: w.psi2.clone(),
    }
}

/// The element `(g_M = -1, b = -1)`, acting by `(ψ1, ψ2, φ1, φ2) ↦ (-ψ1, ψ2, φ1, -φ2)`.
pub fn sign_element(t: &ThetaSpace) -> PairElement {
    let f = t.field;
    let minus = -&f.one();
    PairElement {
        right: RightElement::scalars(t, &f.one(), &minus),
        left: LeftElement::scalars(t, &minus, &f.one()),
    }
}

/// Mutates twice and returns the double mutation transported to `Θ`
/// together with the sign-twisted original point.
pub fn double_mutation(dd: &DoubleDual, t: &ThetaSpace, w: &MorphismPoint, c: &MutationChoice) -> Result<(MorphismPoint, MorphismPoint)> {
    let z = mutate(&dd.first, t, w, c)?;
    let zz = mutate(&dd.second, &dd.first.theta, &z, &return_choice(w, c))?;
    Ok((dd.pull_point(&zz), sign_element(t).act(t, w)))
}
