//! Truncated power series with exact coefficients.
//!
//! A [`Series`] of order `N` represents `c_0 + c_1 z + ... + c_N z^N +
//! O(z^{N+1})`. Arithmetic never consults coefficients beyond the order;
//! combining two series truncates to the smaller order.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::{Rat, Scalar};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Truncated power series `sum c_k z^k + O(z^{order+1})`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<C: Scalar> {
    coeffs: Vec<C>,
}

impl<C: Scalar> Series<C> {
    /// Build from coefficients, padding with zeros or truncating to
    /// `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Series::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Series::new(order, vec![c])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [C] {
        &mut self.coeffs
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    /// Re-truncate to a smaller (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot extend a series");
        Series::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series::new(self.order(), self.coeffs.iter().map(f).collect())
    }

    /// Multiplicative inverse; requires the constant term to be a unit
    /// (every coefficient division must be exact).
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::InexactDivision(
                "series inversion requires a nonzero constant term".into(),
            ));
        }
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        out[0] = C::one().div_exact(c0).ok_or_else(|| {
            Error::InexactDivision(format!("constant term {c0} is not a unit"))
        })?;
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                acc = acc + self.coeff(j) * out[k - j].clone();
            }
            out[k] = (-acc).div_exact(c0).ok_or_else(|| {
                Error::InexactDivision("series inversion left the coefficient ring".into())
            })?;
        }
        Ok(Series { coeffs: out })
    }

    /// Evaluate the truncated polynomial at an `f64` point.
    pub fn eval_f64(&self, z: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64();
        }
        acc
    }
}

impl<C: Scalar> Add for Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: Self) -> Self {
        let order = self.order().min(rhs.order());
        Series::new(
            order,
            (0..=order).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        )
    }
}

impl<C: Scalar> Sub for Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Scalar> Neg for Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Self {
        Series {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Scalar> Mul for Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs: out }
    }
}

impl<C: Scalar> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !(k == 0 && self.coeffs.len() == 1) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Logarithm of a rational series, with the irrational constant split off:
/// `log s = log(constant_arg) + tail(z)` where `tail` has zero constant term
/// and stays in `ℚ[[z]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LogSeries {
    /// The positive constant term `c_0` whose logarithm is kept symbolic.
    pub constant_arg: Rat,
    /// Rational tail; `tail(0) = 0`.
    pub tail: Series<Rat>,
}

impl LogSeries {
    /// `log(constant_arg)` as a double.
    pub fn constant_log_f64(&self) -> f64 {
        crate::ring::rat_to_f64(&self.constant_arg).ln()
    }

    /// Numeric value of the full truncated logarithm at `z`.
    pub fn eval_f64(&self, z: f64) -> f64 {
        self.constant_log_f64() + self.tail.eval_f64(z)
    }
}

/// Truncated logarithm of a rational series with positive constant term.
///
/// The inverse pair property `exp(log_series(s)) == s` holds exactly to the
/// series order.
pub fn log_series(s: &Series<Rat>) -> Result<LogSeries> {
    let c0 = s.constant_term().clone();
    if !c0.is_positive() {
        return Err(Error::LogBranch(c0.to_string()));
    }
    let n = s.order();
    // log(s)' = s'/s; integrate the quotient term by term.
    let mut quot = vec![Rat::zero(); n]; // coefficients of s'/s up to z^{n-1}
    for k in 0..n {
        // s' coefficient k is (k+1) c_{k+1}
        let mut acc = Rat::from_integer(((k + 1) as i64).into()) * s.coeff(k + 1);
        for j in 1..=k {
            acc -= s.coeff(j) * quot[k - j].clone();
        }
        quot[k] = acc / c0.clone();
    }
    let mut tail = vec![Rat::zero(); n + 1];
    for k in 1..=n {
        tail[k] = quot[k - 1].clone() / Rat::from_integer((k as i64).into());
    }
    Ok(LogSeries {
        constant_arg: c0,
        tail: Series::new(n, tail),
    })
}

/// Truncated exponential of a rational series with zero constant term.
pub fn exp_series(t: &Series<Rat>) -> Series<Rat> {
    assert!(
        t.constant_term().is_zero(),
        "exp_series requires a zero constant term"
    );
    let n = t.order();
    let mut out = vec![Rat::zero(); n + 1];
    out[0] = Rat::one();
    for k in 1..=n {
        let mut acc = Rat::zero();
        for j in 1..=k {
            acc += Rat::from_integer((j as i64).into()) * t.coeff(j) * out[k - j].clone();
        }
        out[k] = acc / Rat::from_integer((k as i64).into());
    }
    Series::new(n, out)
}

/// Reassemble `exp` of a [`LogSeries`], recovering the original series.
pub fn exp_log_series(l: &LogSeries) -> Series<Rat> {
    let e = exp_series(&l.tail);
    e.map_coeffs(|c| c * l.constant_arg.clone())
}

/// Taylor series of `p(e^{-z})` about `z = 0`, exact to the given order.
///
/// The coefficient of `z^k` is `(1/k!) * sum_i p_i (-i)^k`.
pub fn exp_substitute<C: Scalar>(p: &UniPoly<C>, order: usize) -> Series<Rat> {
    let mut out = vec![Rat::zero(); order + 1];
    let mut kfact = Rat::one();
    // (-i)^k accumulated per coefficient index
    let mut powers: Vec<Rat> = (0..=p.degree()).map(|_| Rat::one()).collect();
    for (k, slot) in out.iter_mut().enumerate() {
        if k > 0 {
            kfact *= Rat::from_integer((k as i64).into());
            for (i, pw) in powers.iter_mut().enumerate() {
                *pw *= Rat::from_integer((-(i as i64)).into());
            }
        }
        let mut acc = Rat::zero();
        for (i, pw) in powers.iter().enumerate() {
            let pi = p.coeff(i);
            if !pi.is_zero() {
                acc += pi.to_rat() * pw.clone();
            }
        }
        *slot = acc / kfact.clone();
    }
    Series::new(order, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Int;

    fn rs(order: usize, v: &[(i64, i64)]) -> Series<Rat> {
        Series::new(
            order,
            v.iter().map(|&(n, d)| Rat::new(n.into(), d.into())).collect(),
        )
    }

    /// Independent oracle: expand p(e^{-z}) by powering the series of e^{-z}.
    fn exp_substitute_oracle(p: &UniPoly<Int>, order: usize) -> Series<Rat> {
        let mut minus_exp = vec![Rat::zero(); order + 1];
        let mut kfact = Rat::one();
        for (k, slot) in minus_exp.iter_mut().enumerate() {
            if k > 0 {
                kfact *= Rat::from_integer((k as i64).into());
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            *slot = Rat::from_integer(sign.into()) / kfact.clone();
        }
        let e = Series::new(order, minus_exp);
        let mut acc = Series::zero(order);
        let mut power = Series::one(order);
        for i in 0..=p.degree() {
            let c = Rat::from_integer(p.coeff(i));
            acc = acc + power.clone().map_coeffs(|x| x * c.clone());
            power = power * e.clone();
        }
        acc
    }

    #[test]
    fn exp_substitute_matches_oracle_and_frozen_values() {
        let p = UniPoly::new(vec![Int::from(1), Int::from(4), Int::from(1)]);
        let got = exp_substitute(&p, 2);
        assert_eq!(got, exp_substitute_oracle(&p, 2));
        // 6 - 6z + 4z^2 + O(z^3)
        assert_eq!(got, rs(2, &[(6, 1), (-6, 1), (4, 1)]));

        let lin = UniPoly::new(vec![Int::from(1), Int::from(1)]);
        let got = exp_substitute(&lin, 1);
        assert_eq!(got, exp_substitute_oracle(&lin, 1));
        assert_eq!(got, rs(1, &[(2, 1), (-1, 1)]));

        assert_eq!(exp_substitute(&UniPoly::<Int>::one(), 5), Series::one(5));
    }

    #[test]
    fn exp_substitute_truncation_coherence() {
        let p = UniPoly::new(vec![Int::from(2), Int::from(-3), Int::from(5), Int::from(1)]);
        let full = exp_substitute(&p, 9);
        for m in 0..9 {
            assert_eq!(full.truncate(m), exp_substitute(&p, m));
        }
    }

    #[test]
    fn log_series_splits_constant() {
        // log(1 + z) = z + O(z^2)
        let l = log_series(&rs(1, &[(1, 1), (1, 1)])).unwrap();
        assert_eq!(l.constant_arg, Rat::one());
        assert_eq!(l.tail, rs(1, &[(0, 1), (1, 1)]));

        // log(6 - 6z) = log 6 - z - z^2/2 - ...
        let l = log_series(&rs(1, &[(6, 1), (-6, 1)])).unwrap();
        assert_eq!(l.constant_arg, Rat::from_integer(6.into()));
        assert_eq!(l.tail, rs(1, &[(0, 1), (-1, 1)]));
    }

    #[test]
    fn log_rejects_nonpositive_constant() {
        assert!(log_series(&rs(2, &[(0, 1), (1, 1)])).is_err());
        assert!(log_series(&rs(2, &[(-2, 1), (1, 1)])).is_err());
    }

    #[test]
    fn exp_log_round_trip() {
        let s = rs(4, &[(2, 1), (-1, 1), (1, 2), (0, 1), (3, 7)]);
        assert_eq!(exp_log_series(&log_series(&s).unwrap()), s);
    }

    #[test]
    fn inversion_of_unit_series() {
        let s: Series<Int> = Series::new(5, vec![Int::from(1), Int::from(-1)]);
        let inv = s.invert().unwrap();
        // 1/(1-z) = 1 + z + z^2 + ...
        assert!(inv.coeffs().iter().all(|c| *c == Int::from(1)));
        assert_eq!(s * inv, Series::one(5));
        let bad: Series<Int> = Series::new(3, vec![Int::from(2), Int::from(1)]);
        assert!(bad.invert().is_err());
    }
}
