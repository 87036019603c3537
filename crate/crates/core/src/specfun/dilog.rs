//! Complex dilogarithm on the cut plane `C \ [1, inf)`.
//!
//! Four regimes, all with principal logarithms:
//!
//! - `|z| <= 1/2`: defining series `sum z^n / n^2`;
//! - `|z| >= 2`: inversion `Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)`;
//! - `|1 - z| <= 1/2`: reflection `Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)`;
//! - otherwise the Bernoulli series in `u = -log(1-z)`, convergent for
//!   `|u| < 2pi` (always true in the remaining annulus).

use crate::error::{Error, Result};
use crate::specfun::bernoulli::bernoulli_f64;
use num_complex::Complex64;

const ZETA2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// `Li2(z)` to at least 12 significant digits; rejects `z` on the branch
/// cut `[1, inf)` (including the branch point `z = 1`).
pub fn dilog(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(Error::BranchCut(format!("{}", z.re)));
    }
    Ok(dilog_unchecked(z))
}

fn dilog_unchecked(z: Complex64) -> Complex64 {
    let r = z.norm();
    if r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if r <= 0.5 {
        return direct_series(z);
    }
    if r >= 2.0 {
        // Li2(z) + Li2(1/z) = -zeta(2) - log^2(-z)/2
        let inv = dilog_unchecked(1.0 / z);
        let l = (-z).ln();
        return -Complex64::new(ZETA2, 0.0) - 0.5 * l * l - inv;
    }
    let w = Complex64::new(1.0, 0.0) - z;
    if w.norm() <= 0.5 {
        // Li2(z) + Li2(1-z) = zeta(2) - log(z) log(1-z)
        let refl = direct_series(w);
        return Complex64::new(ZETA2, 0.0) - z.ln() * w.ln() - refl;
    }
    bernoulli_series(z)
}

/// Defining series, for `|z| <= 1/2`.
fn direct_series(z: Complex64) -> Complex64 {
    let mut term = z;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..200 {
        acc += term / ((n * n) as f64);
        term *= z;
        if term.norm() < 1e-18 * acc.norm().max(1e-30) {
            break;
        }
    }
    acc
}

/// `Li2(z) = sum_{k>=0} B_k u^{k+1} / (k+1)!` with `u = -log(1-z)`.
fn bernoulli_series(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut upow = u; // u^{k+1}
    let mut fact = 1.0f64; // (k+1)!
    for k in 0..=crate::specfun::bernoulli::TABLE_BOUND {
        fact *= (k + 1) as f64;
        let bk = bernoulli_f64(k).expect("within table bound");
        if bk != 0.0 {
            let term = upow * (bk / fact);
            acc += term;
            if term.norm() < 1e-18 * acc.norm().max(1e-30) && k > 4 {
                break;
            }
        }
        upow *= u;
    }
    acc
}
