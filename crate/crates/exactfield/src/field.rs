//! Base fields and their elements.
//!
//! A [`Field`] is either the rationals or a prime field `GF(p)` with `p < 2^16`.
//! A [`Scalar`] carries its field tag so that mixing elements of different
//! fields is caught at runtime.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ExactError, Result};

/// The base field of a computation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    /// Arbitrary-precision rationals.
    Rationals,
    /// The prime field with the given characteristic.
    Prime(u32),
}

impl Field {
    /// Builds the prime field `GF(p)`, rejecting non-primes and `p >= 2^16`.
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || p >= 1 << 16 || !is_prime(p) {
            return Err(ExactError::BadPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Additive identity.
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    /// Multiplicative identity.
    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer in this field.
    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                v: v.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    /// Image of the fraction `num/den` in this field.
    ///
    /// Panics if `den` is zero in the field.
    pub fn from_frac(self, num: i64, den: i64) -> Scalar {
        &self.from_i64(num) / &self.from_i64(den)
    }

    /// Converts a rational into this field (reduction modulo `p` for prime fields).
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rat(q.clone())),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let n = q.numer().mod_floor(&pm).to_u32().unwrap_or(0);
                let d = q.denom().mod_floor(&pm).to_u32().unwrap_or(0);
                if d == 0 {
                    return Err(ExactError::Parse(format!("{q} has denominator divisible by {p}")));
                }
                Ok(&Scalar::Mod { v: n, p } / &Scalar::Mod { v: d, p })
            }
        }
    }

    /// Number of elements, or `None` for the rationals.
    pub fn order(self) -> Option<u32> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }

    /// All elements of a finite field in increasing representative order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        self.order().map(|p| (0..p as i64).map(|v| self.from_i64(v)).collect())
    }

    /// Parses a scalar written as an integer or `num/den`.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let q = BigRational::from_str(s.trim()).map_err(|_| ExactError::Parse(s.to_string()))?;
        self.from_rational(&q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "rationals" || s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = s.strip_prefix("gf:") {
            let p: u32 = rest.parse().map_err(|_| ExactError::Parse(s.to_string()))?;
            return Field::prime(p);
        }
        Err(ExactError::Parse(s.to_string()))
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// A reduced rational number.
    Rat(BigRational),
    /// A residue `v` modulo the prime `p`, with `v < p`.
    Mod {
        /// Representative in `0..p`.
        v: u32,
        /// The characteristic.
        p: u32,
    },
}

impl Scalar {
    /// The field this scalar belongs to.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    /// Whether this is the additive identity.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    /// Whether this is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod { v, p } => Scalar::Mod {
                v: pow_mod(*v as u64, (*p - 2) as u64, *p as u64) as u32,
                p: *p,
            },
        }
    }

    /// The rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Mod { .. } => None,
        }
    }

    /// A rational view: the rational itself, or the residue representative.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rat(q) => q.clone(),
            Scalar::Mod { v, .. } => BigRational::from_integer(BigInt::from(*v)),
        }
    }

    /// Canonical string: `num/den` for rationals (`num` when integral), residue for `GF(p)`.
    pub fn to_exact_string(&self) -> String {
        match self {
            Scalar::Rat(q) => format_rational(q),
            Scalar::Mod { v, .. } => v.to_string(),
        }
    }

    /// Sign of a rational scalar (`-1`, `0`, `1`); `None` over prime fields.
    pub fn signum(&self) -> Option<i32> {
        match self {
            Scalar::Rat(q) => Some(if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            }),
            Scalar::Mod { .. } => None,
        }
    }
}

/// Formats a rational as `num/den`, or `num` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Formats a rational always in `num/den` form.
pub fn format_rational_frac(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or an integer into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| ExactError::Parse(s.to_string()))
}

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

fn same_prime(a: u32, b: u32) -> u32 {
    assert_eq!(a, b, "mixed prime fields GF({a}) and GF({b})");
    a
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Mod { v: (a + b) % p, p }
            }
            _ => panic!("mixed fields in addition"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Mod { v: (a + p - b) % p, p }
            }
            _ => panic!("mixed fields in subtraction"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Mod {
                    v: ((*a as u64 * *b as u64) % p as u64) as u32,
                    p,
                }
            }
            _ => panic!("mixed fields in multiplication"),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { v, p } => Scalar::Mod { v: (p - v) % p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        match (&mut *self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            _ => *self = &*self + o,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        match (&mut *self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a -= b,
            _ => *self = &*self - o,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(65521).is_ok());
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(65537).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn rational_round_trip() {
        let f = Field::Rationals;
        let a = f.from_frac(3, 7);
        let b = f.from_frac(-5, 11);
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(a.to_exact_string(), "3/7");
        assert_eq!(f.parse("6/14").unwrap(), a);
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        assert_eq!(&a * &a.inv(), f.one());
        assert_eq!(-&a, f.from_i64(4));
        assert_eq!(f.from_frac(1, 2), f.from_i64(4));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
    }

    #[test]
    fn field_parse() {
        assert_eq!("gf:3".parse::<Field>().unwrap(), Field::Prime(3));
        assert_eq!("rationals".parse::<Field>().unwrap(), Field::Rationals);
        assert!("gf:6".parse::<Field>().is_err());
    }
}
