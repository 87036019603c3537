//! Eulerian polynomials `A_d(x)` and their two-variable deformations
//! `F_d(x, y)`, `H_d(x, y)`.
//!
//! Every identity stated about these families is re-checked in exact
//! arithmetic at construction time, so a successfully built family is
//! already a verified one.

use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly};
use crate::ring::{factorial, Int};
use crate::{IntBiPoly, IntPoly};
use num_traits::{One, Signed, Zero};

/// `A_d(x)` by the recursion
/// `A_d = (1 + (d-1)x) A_{d-1} + x(1-x) A'_{d-1}`, starting from `A_0 = 1`.
pub fn eulerian_poly(d: usize) -> IntPoly {
    assert!(d >= 1, "eulerian_poly requires d >= 1");
    let mut a = UniPoly::one();
    for k in 1..=d {
        let lin = UniPoly::new(vec![Int::one(), Int::from(k as i64 - 1)]);
        let x_one_minus_x = UniPoly::new(vec![Int::zero(), Int::one(), Int::from(-1)]);
        a = lin * a.clone() + x_one_minus_x * a.derivative();
    }
    a
}

/// `A_d(x)` from the defining power-series identity
/// `sum_{j>=0} (j+1)^d x^j = A_d(x) / (1-x)^{d+1}`.
///
/// The product `(1-x)^{d+1} * sum_j (j+1)^d x^j` is formed with enough terms
/// that the coefficients of `x^d` through `x^{2d+2}` can be checked to cancel
/// exactly; non-cancellation is an internal-consistency error.
pub fn eulerian_poly_via_definition(d: usize) -> Result<IntPoly> {
    assert!(d >= 1, "eulerian_poly_via_definition requires d >= 1");
    let window = 3 * d + 3;
    let mut power_sum = Vec::with_capacity(window + 1);
    for j in 0..=window {
        power_sum.push(Int::from(j as i64 + 1).pow(d as u32));
    }
    let one_minus_x = UniPoly::new(vec![Int::one(), Int::from(-1)]);
    let product = one_minus_x.pow(d + 1) * UniPoly::new(power_sum);
    // Terms above the truncation window are polluted by cutting the sum off;
    // everything from degree d up to window - (d+1) must vanish.
    for i in d..=window - (d + 1) {
        if !product.coeff(i).is_zero() {
            return Err(Error::IdentityViolation(format!(
                "definition product for d={d} has nonzero coefficient {} at degree {i}",
                product.coeff(i)
            )));
        }
    }
    Ok(UniPoly::new((0..d).map(|i| product.coeff(i)).collect()))
}

/// `A'_d(1)`, which must equal `(d-1) d! / 2` (the Lah numbers).
pub fn eulerian_derivative_at_one(d: usize) -> Int {
    assert!(d >= 1);
    eulerian_poly(d).derivative().eval(&Int::one())
}

/// An Eulerian polynomial together with its index, validated on build.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerianFamily {
    pub d: usize,
    pub a: IntPoly,
}

impl EulerianFamily {
    /// Build `A_d` by both routes and check every stated invariant:
    /// cross-construction equality, `A_d(0) = 1`, `A_d(1) = d!`,
    /// `A'_d(1) = (d-1) d!/2`, positivity of coefficients and the symmetry
    /// `x^{d-1} A_d(1/x) = A_d(x)`.
    pub fn new(d: usize) -> Result<Self> {
        assert!(d >= 1, "EulerianFamily requires d >= 1");
        let a = eulerian_poly(d);
        let via_def = eulerian_poly_via_definition(d)?;
        if a != via_def {
            return Err(Error::IdentityViolation(format!(
                "recursion and definition disagree for A_{d}"
            )));
        }
        if a.coeff(0) != Int::one() {
            return Err(Error::IdentityViolation(format!("A_{d}(0) != 1")));
        }
        if a.eval(&Int::one()) != factorial(d) {
            return Err(Error::IdentityViolation(format!("A_{d}(1) != {d}!")));
        }
        let lah = Int::from(d as i64 - 1) * factorial(d);
        if Int::from(2) * a.derivative().eval(&Int::one()) != lah {
            return Err(Error::IdentityViolation(format!(
                "A'_{d}(1) != (d-1) d!/2"
            )));
        }
        if a.coeffs().iter().any(|c| !c.is_positive()) {
            return Err(Error::IdentityViolation(format!(
                "A_{d} has a non-positive coefficient"
            )));
        }
        if a.degree() != d.saturating_sub(1) || a.reversed() != a {
            return Err(Error::IdentityViolation(format!(
                "A_{d} fails the symmetry x^(d-1) A_d(1/x) = A_d(x)"
            )));
        }
        Ok(EulerianFamily { d, a })
    }
}

/// The deformed pair `(F_d, H_d)` with `F_d = H_d / (1 - y)` exact.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformedFamily {
    pub d: usize,
    pub f: IntBiPoly,
    pub h: IntBiPoly,
}

/// `F_d`, `H_d` by the recursion `F_1 = 1`,
/// `H_d = (1 - x y^d) F_{d-1}(x, y) - y (1 - x) F_{d-1}(x y, y)` and
/// `F_d = H_d / (1 - y)` by exact division.
pub fn deformed_poly(d: usize) -> Result<DeformedFamily> {
    assert!(d >= 1, "deformed_poly requires d >= 1");
    let one_minus_y = BiPoly::new(vec![vec![Int::one(), Int::from(-1)]]);
    let mut f = BiPoly::one();
    // H_1 is not produced by the recursion; fix it so (1-y) F_1 = H_1 holds.
    let mut h = one_minus_y.clone();
    for k in 2..=d {
        let one_minus_x_yk = BiPoly::one() - BiPoly::monomial(Int::one(), 1, k);
        let y_one_minus_x =
            BiPoly::monomial(Int::one(), 0, 1) - BiPoly::monomial(Int::one(), 1, 1);
        h = one_minus_x_yk * f.clone() - y_one_minus_x * f.subst_x_times_y_pow(1);
        f = h.div_exact(&one_minus_y).map_err(|e| {
            Error::IdentityViolation(format!("H_{k} is not divisible by 1-y: {e}"))
        })?;
    }
    Ok(DeformedFamily { d, f, h })
}

impl DeformedFamily {
    /// Build and verify `F_d(x,1) = A_d(x)`, `F_d(0,y) = 1` and
    /// `(1-y) F_d = H_d`.
    pub fn new(d: usize) -> Result<Self> {
        let fam = deformed_poly(d)?;
        let one_minus_y = BiPoly::new(vec![vec![Int::one(), Int::from(-1)]]);
        if one_minus_y * fam.f.clone() != fam.h {
            return Err(Error::IdentityViolation(format!("(1-y) F_{d} != H_{d}")));
        }
        if fam.f.eval_y(&Int::one()) != eulerian_poly(d) {
            return Err(Error::IdentityViolation(format!("F_{d}(x,1) != A_{d}(x)")));
        }
        if fam.f.eval_x(&Int::zero()) != UniPoly::one() {
            return Err(Error::IdentityViolation(format!("F_{d}(0,y) != 1")));
        }
        Ok(fam)
    }

    /// `F_d^{(0,1)}(x, 1)` as an exact polynomial in `x`.
    pub fn dy_at_y1(&self) -> IntPoly {
        self.f.partial_y().eval_y(&Int::one())
    }

    /// `F_d^{(1,0)}(x, 1)` as an exact polynomial in `x`.
    pub fn dx_at_y1(&self) -> IntPoly {
        self.f.partial_x().eval_y(&Int::one())
    }

    /// Check `F_d^{(0,1)}(x,1) = (d x / 2) F_d^{(1,0)}(x,1)` exactly
    /// (compared as `2 F^{(0,1)} = d x F^{(1,0)}` to stay over the integers).
    pub fn differential_identity_holds(&self) -> bool {
        let lhs = UniPoly::constant(Int::from(2)) * self.dy_at_y1();
        let rhs = UniPoly::monomial(Int::from(self.d as i64), 1) * self.dx_at_y1();
        lhs == rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_bipoly, parse_unipoly};

    #[test]
    fn first_eulerian_polynomials() {
        assert_eq!(eulerian_poly(1), UniPoly::one());
        assert_eq!(eulerian_poly(2), parse_unipoly("1+x").unwrap());
        assert_eq!(eulerian_poly(3), parse_unipoly("1+4x+x^2").unwrap());
        assert_eq!(eulerian_poly(5).eval(&Int::one()), Int::from(120));
    }

    #[test]
    fn definition_route_matches_recursion() {
        assert_eq!(eulerian_poly_via_definition(1).unwrap(), UniPoly::one());
        assert_eq!(
            eulerian_poly_via_definition(2).unwrap(),
            parse_unipoly("1+x").unwrap()
        );
        for d in 1..=10 {
            assert_eq!(eulerian_poly_via_definition(d).unwrap(), eulerian_poly(d));
        }
    }

    #[test]
    fn derivative_at_one_is_lah() {
        assert_eq!(eulerian_derivative_at_one(1), Int::zero());
        assert_eq!(eulerian_derivative_at_one(4), Int::from(36));
        assert_eq!(eulerian_derivative_at_one(6), Int::from(1800));
        for d in 1..=10 {
            assert_eq!(
                Int::from(2) * eulerian_derivative_at_one(d),
                Int::from(d as i64 - 1) * factorial(d)
            );
        }
    }

    #[test]
    fn families_validate_up_to_ten() {
        for d in 1..=10 {
            let fam = EulerianFamily::new(d).unwrap();
            assert_eq!(fam.a.degree(), d.saturating_sub(1));
        }
    }

    #[test]
    fn deformed_first_cases() {
        assert_eq!(deformed_poly(1).unwrap().f, BiPoly::one());
        assert_eq!(deformed_poly(2).unwrap().f, parse_bipoly("1+x*y").unwrap());
        assert_eq!(
            deformed_poly(3).unwrap().f,
            parse_bipoly("1+2*x*y+2*x*y^2+x^2*y^3").unwrap()
        );
    }

    #[test]
    fn deformed_specializes_to_eulerian() {
        for d in 1..=8 {
            let fam = DeformedFamily::new(d).unwrap();
            assert_eq!(fam.f.eval_y(&Int::one()), eulerian_poly(d));
            assert_eq!(fam.f.eval(&Int::one(), &Int::one()), factorial(d));
        }
    }

    #[test]
    fn differential_identity_up_to_eight() {
        for d in 2..=8 {
            assert!(DeformedFamily::new(d).unwrap().differential_identity_holds());
        }
    }

    #[test]
    fn no_zeros_on_unit_interval_via_positivity() {
        // All coefficients positive means A_d(x) >= 1 on [0, 1].
        for d in 1..=10 {
            assert!(eulerian_poly(d).coeffs().iter().all(|c| c.is_positive()));
        }
    }
}
