//! Closed forms of the two constants.

use exactfield::BigRational;

use crate::tau::Sigma;

fn r(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Which branch of the closed form applies.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `m ≤ n + 1`.
    Growing,
    /// `m ≥ n + 1`.
    Capped,
}

/// The branch used for `m`; at `m = n + 1` both agree and the growing one is returned.
pub fn branch(n: usize, m: usize) -> Branch {
    if m <= n + 1 {
        Branch::Growing
    } else {
        Branch::Capped
    }
}

/// The closed form on a given branch.
pub fn c_branch(which: Sigma, b: Branch, n: usize, m: usize) -> BigRational {
    let (n, m) = (n as i64, m as i64);
    match (which, b) {
        (Sigma::Zero, Branch::Growing) => r(m * (m - 1), 2 * (m * (n + 1) - 1)),
        (Sigma::Zero, Branch::Capped) => r(n + 1, 2 * (n + 2)),
        (Sigma::One, Branch::Growing) => r((n + 1) * (m * (n + 2) - 2), 2 * (m * (n + 1) - 1)),
        (Sigma::One, Branch::Capped) => r((n + 1) * (n + 3), 2 * (n + 2)),
    }
}

/// `c_0(m)` or `c_1(m)` on `P^n`.
pub fn c_formula(which: Sigma, n: usize, m: usize) -> BigRational {
    c_branch(which, branch(n, m), n, m)
}
