//! Exact Bernoulli numbers and polynomials.
//!
//! Convention: `B_1 = -1/2`, so that `B_1(1) = +1/2`. This is the convention
//! under which the `n = 0` Euler–Maclaurin term of the log-product expansion
//! equals `-log(d!)/2` (see the asymptotics module).

use crate::error::{Error, Result};
use crate::ring::{binomial, Rat};
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Largest index kept in the table.
pub const TABLE_BOUND: usize = 64;

static TABLE: OnceLock<Vec<Rat>> = OnceLock::new();

fn table() -> &'static [Rat] {
    TABLE.get_or_init(|| {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, B_0 = 1
        let mut b = vec![Rat::one()];
        for n in 1..=TABLE_BOUND {
            let mut acc = Rat::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += Rat::from_integer(binomial(n + 1, k)) * bk;
            }
            b.push(-acc / Rat::from_integer((n as i64 + 1).into()));
        }
        b
    })
}

/// Exact Bernoulli number `B_n`; errors past the table bound.
pub fn bernoulli(n: usize) -> Result<Rat> {
    table()
        .get(n)
        .cloned()
        .ok_or(Error::BernoulliRange(n, TABLE_BOUND))
}

/// `B_n` as a double.
pub fn bernoulli_f64(n: usize) -> Result<f64> {
    Ok(crate::ring::rat_to_f64(&bernoulli(n)?))
}

/// Coefficients of the Bernoulli polynomial `B_n(x)`, ascending degree:
/// `B_n(x) = sum_k C(n, k) B_k x^{n-k}`.
pub fn bernoulli_poly_coeffs(n: usize) -> Result<Vec<Rat>> {
    let mut coeffs = vec![Rat::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = Rat::from_integer(binomial(n, k)) * bernoulli(k)?;
    }
    Ok(coeffs)
}

/// Exact `B_n(a)` at a rational point.
pub fn bernoulli_poly(n: usize, a: &Rat) -> Result<Rat> {
    let coeffs = bernoulli_poly_coeffs(n)?;
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * a + c;
    }
    Ok(acc)
}

/// `B_n(a)` as a double at a double point.
pub fn bernoulli_poly_f64(n: usize, a: f64) -> Result<f64> {
    let coeffs = bernoulli_poly_coeffs(n)?;
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * a + crate::ring::rat_to_f64(c);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{exp_series, Series};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn small_values_and_sign_convention() {
        assert_eq!(bernoulli(0).unwrap(), Rat::one());
        assert_eq!(bernoulli(1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for k in 1..=31 {
            assert_eq!(bernoulli(2 * k + 1).unwrap(), Rat::zero());
        }
    }

    #[test]
    fn polynomial_values() {
        // B_1(x) = x - 1/2
        assert_eq!(bernoulli_poly(1, &Rat::one()).unwrap(), rat(1, 2));
        assert_eq!(bernoulli_poly(2, &Rat::zero()).unwrap(), rat(1, 6));
        // B_{n+1}(1) = 0 for n >= 2 even
        assert_eq!(bernoulli_poly(3, &Rat::one()).unwrap(), Rat::zero());
        assert_eq!(bernoulli_poly(5, &Rat::one()).unwrap(), Rat::zero());
        // B_2(x) = x^2 - x + 1/6 at 1/2: -1/12
        assert_eq!(bernoulli_poly(2, &rat(1, 2)).unwrap(), rat(-1, 12));
    }

    #[test]
    fn recurrence_identity_holds() {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0
        for n in 1..=TABLE_BOUND {
            let mut acc = Rat::zero();
            for k in 0..=n {
                acc += Rat::from_integer(binomial(n + 1, k)) * bernoulli(k).unwrap();
            }
            assert_eq!(acc, Rat::zero(), "failed at n={n}");
        }
    }

    #[test]
    fn matches_generating_function() {
        // z/(e^z - 1) = sum B_k z^k / k!, checked through the series module.
        let order = 20;
        // (e^z - 1)/z as a series: coefficient k is 1/(k+1)!
        let mut t = vec![Rat::zero(); order + 1];
        t[1] = Rat::one();
        let ez = exp_series(&Series::new(order, t)); // e^z
        let mut em1_over_z = vec![Rat::zero(); order + 1];
        for k in 0..order {
            em1_over_z[k] = ez.coeff(k + 1);
        }
        let inv = Series::new(order, em1_over_z).invert().unwrap();
        let mut kfact = Rat::one();
        // the top coefficient of (e^z - 1)/z is lost to truncation, so the
        // comparison stops one short of the order
        for k in 0..order {
            if k > 1 {
                kfact *= Rat::from_integer((k as i64).into());
            }
            assert_eq!(inv.coeff(k) * kfact.clone(), bernoulli(k).unwrap());
        }
    }

    #[test]
    fn out_of_range_errors() {
        assert!(bernoulli(TABLE_BOUND).is_ok());
        assert!(bernoulli(TABLE_BOUND + 1).is_err());
    }
}
