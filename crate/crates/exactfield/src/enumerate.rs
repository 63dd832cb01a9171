//! Exhaustive enumeration over finite fields.

use crate::error::{ExactError, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Number of `d`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(q: u32, n: usize, d: usize) -> u128 {
    if d > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Number of subspaces of every dimension of `GF(q)^n`.
pub fn total_subspace_count(q: u32, n: usize) -> u128 {
    (0..=n).map(|d| gaussian_binomial(q, n, d)).sum()
}

fn prime_of(field: Field) -> Result<u32> {
    field
        .order()
        .ok_or_else(|| ExactError::Parse("enumeration requires a prime field".into()))
}

/// Visits every `d`-dimensional subspace of `field^n` once, in canonical
/// reduced echelon form, in a fixed deterministic order.
pub fn for_each_subspace(field: Field, n: usize, d: usize, budget: u128, mut visit: impl FnMut(Subspace)) -> Result<()> {
    let q = prime_of(field)?;
    let needed = gaussian_binomial(q, n, d);
    if needed > budget {
        return Err(ExactError::Budget { needed, budget });
    }
    if d > n {
        return Ok(());
    }
    let elems = field.elements().expect("finite field");
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| {
                let p = &pivots;
                ((p[i] + 1)..n).filter(move |j| !p.contains(j)).map(move |j| (i, j))
            })
            .collect();
        let mut digits = vec![0usize; free.len()];
        loop {
            let mut rows = Matrix::zeros(field, d, n);
            for (i, &c) in pivots.iter().enumerate() {
                rows.set(i, c, field.one());
            }
            for (k, &(i, j)) in free.iter().enumerate() {
                rows.set(i, j, elems[digits[k]].clone());
            }
            visit(Subspace::span(&rows.transpose()));
            if !increment(&mut digits, q as usize) {
                break;
            }
        }
        if !next_combination(&mut pivots, n) {
            break;
        }
    }
    Ok(())
}

/// All `d`-dimensional subspaces of `field^n`, each exactly once.
pub fn enumerate_subspaces(field: Field, n: usize, d: usize, budget: u128) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for_each_subspace(field, n, d, budget, |s| out.push(s))?;
    Ok(out)
}

/// All vectors of `field^n` as column matrices, in lexicographic order.
pub fn all_vectors(field: Field, n: usize, budget: u128) -> Result<Vec<Matrix>> {
    let q = prime_of(field)?;
    let needed = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(ExactError::Budget { needed, budget });
    }
    let elems = field.elements().expect("finite field");
    let mut digits = vec![0usize; n];
    let mut out = Vec::with_capacity(needed as usize);
    loop {
        out.push(Matrix::column(field, digits.iter().map(|&k| elems[k].clone()).collect()));
        if !increment(&mut digits, q as usize) {
            break;
        }
    }
    Ok(out)
}

/// Advances a little-endian odometer; returns `false` after the last value.
pub fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in (i + 1)..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
