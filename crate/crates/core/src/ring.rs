//! Coefficient rings for polynomials and truncated series.
//!
//! The polynomial and series layers are generic over [`Scalar`], an exact
//! commutative ring. The two rings actually used are arbitrary-precision
//! integers ([`Int`]) and rationals ([`Rat`]); concrete aliases for the
//! generic containers live at the crate root.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator
/// (guaranteed by `num-rational`).
pub type Rat = BigRational;

/// An exact commutative ring usable as a coefficient domain.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Exact division; `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// Lossy conversion for numeric evaluation.
    fn to_f64(&self) -> f64;

    /// Exact embedding into the rationals.
    fn to_rat(&self) -> Rat;

    /// Embed a machine integer.
    fn from_i64(n: i64) -> Self;
}

impl Scalar for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rat(&self) -> Rat {
        Rat::from_integer(self.clone())
    }

    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Scalar for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }

    fn to_rat(&self) -> Rat {
        self.clone()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Convert a rational to `f64` without overflowing on huge numerator or
/// denominator: uses `ln`-scaled division when the direct route fails.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = ToPrimitive::to_f64(r) {
        if v.is_finite() || r.numer().is_zero() {
            return v;
        }
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    let ln = ln_bigint(&r.numer().abs()) - ln_bigint(r.denom());
    sign * ln.exp()
}

/// Natural logarithm of a positive big integer, exact to f64 rounding for
/// any magnitude.
pub fn ln_bigint(n: &BigInt) -> f64 {
    assert!(n.is_positive(), "ln_bigint requires a positive argument");
    let bits = n.bits();
    if bits <= 64 {
        return ToPrimitive::to_f64(n).unwrap().ln();
    }
    // n = m * 2^shift with m holding the top 64 bits
    let shift = bits - 64;
    let m = n >> shift;
    ToPrimitive::to_f64(&m).unwrap().ln() + (shift as f64) * std::f64::consts::LN_2
}

/// Exact factorial as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn div_exact_int() {
        let a = BigInt::from(12);
        let b = BigInt::from(4);
        assert_eq!(a.div_exact(&b), Some(BigInt::from(3)));
        assert_eq!(a.div_exact(&BigInt::from(5)), None);
        assert_eq!(a.div_exact(&BigInt::zero()), None);
    }

    #[test]
    fn ln_bigint_matches_known_values() {
        let n = BigInt::from(1_000_000u64);
        assert!((ln_bigint(&n) - 6.0 * 10f64.ln()).abs() < 1e-12);
        // 2^300: ln = 300 ln 2
        let big = BigInt::one() << 300;
        assert!((ln_bigint(&big) - 300.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn rat_to_f64_handles_extremes() {
        let r = BigRational::from_f64(0.625).unwrap();
        assert_eq!(rat_to_f64(&r), 0.625);
        let huge = BigRational::new(BigInt::one() << 2000, (BigInt::one() << 2000) + 1i32);
        assert!((rat_to_f64(&huge) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn binomial_row() {
        let row: Vec<_> = (0..=4).map(|k| binomial(4, k)).collect();
        let expect: Vec<_> = [1, 4, 6, 4, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(row, expect);
    }
}
