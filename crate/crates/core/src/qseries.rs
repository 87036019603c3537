//! Exact big-integer expansion of the generating functions.
//!
//! All products are expanded factor by factor against a truncated series of
//! order `N`; a factor whose lowest non-constant exponent exceeds `N`
//! contributes nothing and is skipped, so the formal infinite products are
//! handled exactly.

use crate::error::{Error, Result};
use crate::eulerian::{deformed_poly, eulerian_poly};
use crate::poly::BiPoly;
use crate::ring::Int;
use crate::series::Series;
use crate::{IntBiPoly, IntSeries};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

impl Series<Int> {
    /// In-place multiplication by the sparse polynomial
    /// `1 + sum_e c_e q^e` given by its non-constant terms (sorted by
    /// ascending exponent).
    pub fn mul_sparse_assign(&mut self, terms: &[(usize, Int)]) {
        let n = self.order();
        let coeffs = self.coeffs_mut();
        for k in (0..=n).rev() {
            let mut acc = Int::zero();
            for (e, c) in terms {
                if *e > k {
                    break;
                }
                acc += c * &coeffs[k - e];
            }
            coeffs[k] += acc;
        }
    }

    /// In-place division by the sparse polynomial `1 + sum_e c_e q^e`;
    /// exactness is automatic because the constant term is 1.
    pub fn div_sparse_assign(&mut self, terms: &[(usize, Int)]) {
        let n = self.order();
        let coeffs = self.coeffs_mut();
        for k in 0..=n {
            let mut acc = Int::zero();
            for (e, c) in terms {
                if *e > k {
                    break;
                }
                acc += c * &coeffs[k - e];
            }
            coeffs[k] -= acc;
        }
    }

    /// In-place multiplication by the geometric series `1/(1 - q^m)`.
    pub fn div_one_minus_assign(&mut self, m: usize) {
        let n = self.order();
        if m == 0 || m > n {
            return;
        }
        let coeffs = self.coeffs_mut();
        for k in m..=n {
            let prev = coeffs[k - m].clone();
            coeffs[k] += prev;
        }
    }
}

/// Partition numbers `p(0..=N)` by Euler's pentagonal-number recurrence.
///
/// This is the independent oracle used to validate the product expansions.
pub fn partition_numbers(order: usize) -> IntSeries {
    let mut p = vec![Int::zero(); order + 1];
    p[0] = Int::one();
    for n in 1..=order {
        let mut acc = Int::zero();
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if sign > 0 {
                acc += &p[n - g1];
            } else {
                acc -= &p[n - g1];
            }
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                if sign > 0 {
                    acc += &p[n - g2];
                } else {
                    acc -= &p[n - g2];
                }
            }
            k += 1;
        }
        p[n] = acc;
    }
    Series::new(order, p)
}

/// Coefficients `s_d(0..=N)` of `prod_{n>=1} A_d(q^n) / (1-q^n)^{d+1}`.
pub fn schmidt_series(d: usize, order: usize) -> IntSeries {
    assert!(d >= 1, "schmidt_series requires d >= 1");
    let a = eulerian_poly(d);
    let mut s = Series::one(order);
    for n in 1..=order {
        let terms: Vec<(usize, Int)> = (1..=a.degree())
            .map(|i| (i * n, a.coeff(i)))
            .filter(|(e, c)| *e <= order && !c.is_zero())
            .collect();
        s.mul_sparse_assign(&terms);
        for _ in 0..=d {
            s.div_one_minus_assign(n);
        }
    }
    s
}

/// Coefficients `r_d(0..=N)` of
/// `prod_{n>=1} F_d(q^{(d+1)(n-1)+1}, q) / (1-q^n)`.
pub fn size_series(d: usize, order: usize) -> Result<IntSeries> {
    assert!(d >= 1, "size_series requires d >= 1");
    let f = deformed_poly(d)?.f;
    let mut s = Series::one(order);
    for n in 1..=order {
        s.div_one_minus_assign(n);
        let m = (d + 1) * (n - 1) + 1;
        let terms = substituted_terms(&f, m, order);
        s.mul_sparse_assign(&terms);
    }
    Ok(s)
}

/// Non-constant terms of `P(q^m, q)` with exponents clipped at `order`,
/// sorted by exponent, duplicates merged.
fn substituted_terms(p: &IntBiPoly, m: usize, order: usize) -> Vec<(usize, Int)> {
    let mut terms: Vec<(usize, Int)> = Vec::new();
    for (i, j, c) in p.terms() {
        if i == 0 && j == 0 {
            continue;
        }
        let e = m * i + j;
        if e <= order {
            terms.push((e, c.clone()));
        }
    }
    terms.sort_by_key(|(e, _)| *e);
    let mut merged: Vec<(usize, Int)> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match merged.last_mut() {
            Some((le, lc)) if *le == e => *lc += c,
            _ => merged.push((e, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    merged
}

/// Specification of a general product
/// `prod_{n>=0} P(q^{A n + a}, q) / Q(q^{B n + b}, q)`.
///
/// `P` and `Q` must satisfy `P(0, y) = Q(0, y) = 1` so that every
/// substituted factor is `1 + (positive powers of q)`; offsets may equal
/// their steps (the common `(q; q)`-style indexing), and degenerate unit
/// factors are rejected during expansion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ProductSpecText", into = "ProductSpecText")]
pub struct ProductSpec {
    pub p: IntBiPoly,
    pub q: IntBiPoly,
    pub step_p: usize,
    pub offset_p: usize,
    pub step_q: usize,
    pub offset_q: usize,
}

/// Wire form of [`ProductSpec`]: polynomials in the text format, with the
/// conventional single-letter field names.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[allow(non_snake_case)]
struct ProductSpecText {
    P: String,
    Q: String,
    A: usize,
    a: usize,
    B: usize,
    b: usize,
}

impl TryFrom<ProductSpecText> for ProductSpec {
    type Error = Error;
    fn try_from(t: ProductSpecText) -> Result<Self> {
        ProductSpec::new(
            crate::parse::parse_bipoly_nonzero(&t.P)?,
            crate::parse::parse_bipoly_nonzero(&t.Q)?,
            t.A,
            t.a,
            t.B,
            t.b,
        )
    }
}

impl From<ProductSpec> for ProductSpecText {
    fn from(s: ProductSpec) -> Self {
        ProductSpecText {
            P: s.p.to_string(),
            Q: s.q.to_string(),
            A: s.step_p,
            a: s.offset_p,
            B: s.step_q,
            b: s.offset_q,
        }
    }
}

impl ProductSpec {
    pub fn new(
        p: IntBiPoly,
        q: IntBiPoly,
        step_p: usize,
        offset_p: usize,
        step_q: usize,
        offset_q: usize,
    ) -> Result<Self> {
        if step_p == 0 || step_q == 0 {
            return Err(Error::Precondition("steps A and B must be positive".into()));
        }
        if offset_p > step_p || offset_q > step_q {
            return Err(Error::Precondition(
                "offsets must not exceed their steps".into(),
            ));
        }
        for (poly, name) in [(&p, "P"), (&q, "Q")] {
            if poly.eval_x(&Int::zero()) != crate::poly::UniPoly::one() {
                return Err(Error::Precondition(format!("{name}(0, y) must equal 1")));
            }
        }
        Ok(ProductSpec {
            p,
            q,
            step_p,
            offset_p,
            step_q,
            offset_q,
        })
    }

    /// Encoding of the Schmidt-size generating function:
    /// `P = A_d(x)`, `A = 1`, `a = 1`, `Q = (1-x)^{d+1}`, `B = 1`, `b = 1`.
    pub fn schmidt(d: usize) -> Result<Self> {
        let a = eulerian_poly(d).to_bipoly();
        let one_minus_x = BiPoly::one() - BiPoly::monomial(Int::one(), 1, 0);
        let mut q = BiPoly::one();
        for _ in 0..=d {
            q = q * one_minus_x.clone();
        }
        ProductSpec::new(a, q, 1, 1, 1, 1)
    }

    /// Encoding of the size generating function:
    /// `P = F_d`, `A = d+1`, `a = 1`, `Q = 1-x`, `B = 1`, `b = 1`.
    pub fn size(d: usize) -> Result<Self> {
        let f = deformed_poly(d)?.f;
        let one_minus_x = BiPoly::one() - BiPoly::monomial(Int::one(), 1, 0);
        ProductSpec::new(f, one_minus_x, d + 1, 1, 1, 1)
    }
}

/// Exact coefficients of the product described by `spec`, to order `N`.
pub fn general_product_series(spec: &ProductSpec, order: usize) -> Result<IntSeries> {
    let mut s = Series::one(order);
    apply_factors(&mut s, &spec.p, spec.step_p, spec.offset_p, order, false)?;
    apply_factors(&mut s, &spec.q, spec.step_q, spec.offset_q, order, true)?;
    Ok(s)
}

fn apply_factors(
    s: &mut IntSeries,
    poly: &IntBiPoly,
    step: usize,
    offset: usize,
    order: usize,
    divide: bool,
) -> Result<()> {
    if poly.deg_x() == 0 && poly.deg_y() == 0 {
        return Ok(()); // constant 1 (P(0, y) = 1 makes it so)
    }
    let mut n = 0;
    loop {
        let m = step * n + offset;
        // Constant term of the substituted factor: all (i, j) with m*i+j = 0.
        let mut constant = Int::zero();
        for (i, j, c) in poly.terms() {
            if m * i + j == 0 {
                constant += c;
            }
        }
        if !constant.is_one() {
            return Err(Error::DivergentFactor {
                index: n,
                constant: constant.to_string(),
            });
        }
        let terms: Vec<(usize, Int)> = substituted_terms(poly, m, order)
            .into_iter()
            .filter(|(e, _)| *e > 0)
            .collect();
        if divide {
            s.div_sparse_assign(&terms);
        } else {
            s.mul_sparse_assign(&terms);
        }
        // Non-constant terms have x-degree >= 1, so exponents are >= m.
        if m > order {
            break;
        }
        n += 1;
    }
    Ok(())
}

/// Index of the first monotonicity violation (`c_n < c_{n-1}`), or `None`
/// when the coefficients are weakly increasing throughout.
pub fn monotonicity_check(s: &IntSeries) -> Option<usize> {
    (1..=s.order()).find(|&n| s.coeff(n) < s.coeff(n - 1))
}

/// Check that all coefficients are non-negative.
pub fn all_nonnegative(s: &IntSeries) -> bool {
    s.coeffs().iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_bipoly;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    /// Direct enumeration of partitions of n (independent of the recurrence).
    fn count_partitions(n: usize, max_part: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max_part)).map(|k| count_partitions(n - k, k)).sum()
    }

    #[test]
    fn pentagonal_recurrence_matches_enumeration() {
        let p = partition_numbers(10);
        assert_eq!(&p.coeffs()[..7], &ints(&[1, 1, 2, 3, 5, 7, 11])[..]);
        for n in 0..=10 {
            assert_eq!(p.coeff(n), Int::from(count_partitions(n, n.max(1))));
        }
    }

    #[test]
    fn schmidt_one_is_self_convolution_of_partitions() {
        let s = schmidt_series(1, 12);
        assert_eq!(&s.coeffs()[..6], &ints(&[1, 2, 5, 10, 20, 36])[..]);
        let p = partition_numbers(12);
        for n in 0..=12 {
            let conv: Int = (0..=n).map(|k| p.coeff(k) * p.coeff(n - k)).sum();
            assert_eq!(s.coeff(n), conv);
        }
    }

    #[test]
    fn size_one_is_partition_numbers() {
        let r = size_series(1, 10).unwrap();
        assert_eq!(r.coeffs(), &ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42])[..]);
    }

    #[test]
    fn general_product_reproduces_partitions() {
        let spec =
            ProductSpec::new(BiPoly::one(), parse_bipoly("1-x").unwrap(), 1, 1, 1, 1).unwrap();
        let series = general_product_series(&spec, 60).unwrap();
        assert_eq!(series, partition_numbers(60));
    }

    #[test]
    fn distinct_parts_product() {
        // prod (1 + q^n): distinct partitions, checked against a subset-sum DP.
        let spec =
            ProductSpec::new(parse_bipoly("1+x").unwrap(), BiPoly::one(), 1, 1, 1, 1).unwrap();
        let n = 40;
        let series = general_product_series(&spec, n).unwrap();
        assert_eq!(&series.coeffs()[..8], &ints(&[1, 1, 1, 2, 2, 3, 4, 5])[..]);
        let mut dp = vec![Int::zero(); n + 1];
        dp[0] = Int::one();
        for part in 1..=n {
            for k in (part..=n).rev() {
                let add = dp[k - part].clone();
                dp[k] += add;
            }
        }
        assert_eq!(series.coeffs(), &dp[..]);

        // The 2-regular encoding (1-x^2 over 1-x) gives the same series.
        let two_regular = ProductSpec::new(
            parse_bipoly("1-x^2").unwrap(),
            parse_bipoly("1-x").unwrap(),
            1,
            1,
            1,
            1,
        )
        .unwrap();
        assert_eq!(general_product_series(&two_regular, n).unwrap(), series);
    }

    #[test]
    fn trivial_product_is_one() {
        let spec = ProductSpec::new(BiPoly::one(), BiPoly::one(), 1, 1, 1, 1).unwrap();
        let series = general_product_series(&spec, 8).unwrap();
        assert_eq!(series.coeff(0), Int::one());
        assert!((1..=8).all(|n| series.coeff(n).is_zero()));
    }

    #[test]
    fn size_encoding_matches_size_series() {
        for d in [1, 2, 3] {
            let spec = ProductSpec::size(d).unwrap();
            assert_eq!(
                general_product_series(&spec, 24).unwrap(),
                size_series(d, 24).unwrap()
            );
        }
    }

    #[test]
    fn schmidt_encoding_matches_schmidt_series() {
        for d in [1, 2, 3] {
            let spec = ProductSpec::schmidt(d).unwrap();
            assert_eq!(
                general_product_series(&spec, 24).unwrap(),
                schmidt_series(d, 24)
            );
        }
    }

    #[test]
    fn truncation_coherence() {
        let long = schmidt_series(2, 50);
        assert_eq!(long.truncate(20), schmidt_series(2, 20));
        let long = size_series(3, 50).unwrap();
        assert_eq!(long.truncate(20), size_series(3, 20).unwrap());
    }

    #[test]
    fn monotonicity_detects_violations() {
        assert_eq!(
            monotonicity_check(&Series::new(2, ints(&[1, 2, 1]))),
            Some(2)
        );
        assert_eq!(monotonicity_check(&schmidt_series(2, 200)), None);
        assert_eq!(monotonicity_check(&size_series(3, 200).unwrap()), None);
    }

    #[test]
    fn divergent_factor_is_rejected() {
        // a = 0 makes the n = 0 numerator factor P(1, q) = 2 + q: unit violation.
        let spec =
            ProductSpec::new(parse_bipoly("1+x+x*y").unwrap(), BiPoly::one(), 1, 0, 1, 1)
                .unwrap();
        assert!(matches!(
            general_product_series(&spec, 10),
            Err(Error::DivergentFactor { index: 0, .. })
        ));
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = ProductSpec::size(2).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"P\""));
        let back: ProductSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        // rejects malformed polynomials
        let bad = r#"{"P":"1/2+x","Q":"1","A":1,"a":1,"B":1,"b":1}"#;
        assert!(serde_json::from_str::<ProductSpec>(bad).is_err());
    }
}
