//! Growth constants and coefficient asymptotics.
//!
//! The central object is the constant `C_P = int_0^inf log P(e^-x) dx`,
//! computed by two independent routes: adaptive quadrature of
//! `log P(u) / u` on `(0, 1]`, and the dilogarithm sum `-sum_j Li2(1/a_j)`
//! over the roots of `P`. Agreement of the two routes is the primary
//! numerical check of the whole toolchain.
//!
//! On top of the constants sit the Tauberian parameter triples
//! `(lambda, beta, gamma)` for the diamond counting sequences, the
//! evaluator `b(n) ~ lambda gamma^{beta/2+1/4} / (2 sqrt(pi) n^{beta/2+3/4})
//! * exp(2 sqrt(gamma n))`, exact Euler–Maclaurin expansions of the
//! log-products, and exact-versus-asymptotic comparison tables.

use crate::error::{Error, Result};
use crate::eulerian::{deformed_poly, eulerian_poly};
use crate::poly::{BiPoly, UniPoly};
use crate::qseries::ProductSpec;
use crate::ring::{factorial, ln_bigint, Int, Rat, Scalar};
use crate::series::{exp_substitute, log_series};
use crate::specfun::bernoulli::bernoulli_poly;
use crate::specfun::dilog::dilog;
use crate::specfun::quad::{integrate, DEFAULT_TOL};
use crate::specfun::roots::poly_roots;
use crate::{IntBiPoly, IntPoly, IntSeries, RatBiPoly};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::f64::consts::PI;

/// Tolerance below which the two routes for a constant must agree.
pub const DUAL_ROUTE_TOL: f64 = 1e-9;

/// Parameters `(lambda, beta, gamma)` of the Tauberian evaluator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymParams {
    pub lambda: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl AsymParams {
    /// Build, enforcing the theorem hypotheses `gamma > 0` and `lambda > 0`.
    pub fn new(lambda: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) {
            return Err(Error::HypothesisViolated { gamma });
        }
        if !(lambda > 0.0) {
            return Err(Error::Precondition(format!(
                "lambda = {lambda} must be positive"
            )));
        }
        Ok(AsymParams { lambda, beta, gamma })
    }
}

/// A growth constant computed by both routes.
#[derive(Clone, Copy, Debug)]
pub struct ConstantReport {
    pub value_quadrature: f64,
    pub value_dilog: f64,
    pub abs_gap: f64,
}

impl ConstantReport {
    /// Canonical value (the quadrature of the defining integral).
    pub fn value(&self) -> f64 {
        self.value_quadrature
    }

    /// Whether the two routes agree within [`DUAL_ROUTE_TOL`].
    pub fn is_consistent(&self) -> bool {
        self.abs_gap < DUAL_ROUTE_TOL
    }
}

/// Reject polynomials with a root within `1e-8` of the interval `[0, 1]`.
fn check_no_roots_on_unit_interval(roots: &[Complex64]) -> Result<()> {
    for r in roots {
        if r.im.abs() <= 1e-8 && r.re >= -1e-8 && r.re <= 1.0 + 1e-8 {
            return Err(Error::ZeroOnUnitInterval(format!("{r}")));
        }
    }
    Ok(())
}

/// `C_P = int_0^inf log P(e^-x) dx` for a polynomial with `P(0) = 1` and no
/// zeros on `[0, 1]`, by quadrature and by `-sum_j Li2(1/a_j)`.
pub fn c_constant(p: &IntPoly) -> Result<ConstantReport> {
    if p.coeff(0) != Int::one() {
        return Err(Error::Precondition(format!(
            "c_constant requires P(0) = 1, got {}",
            p.coeff(0)
        )));
    }
    if p.degree() == 0 {
        // P = 1: the integral is 0 and the root sum is empty.
        return Ok(ConstantReport {
            value_quadrature: 0.0,
            value_dilog: 0.0,
            abs_gap: 0.0,
        });
    }
    let roots = poly_roots(p)?;
    check_no_roots_on_unit_interval(&roots)?;

    // Route 1: substituting u = e^-x turns the integral into
    // int_0^1 log P(u) / u du; log P(u) = log1p(P(u) - 1) avoids
    // cancellation near u = 0 where P(u) -> 1.
    let integrand = |u: f64| p.eval_f64_tail(u).ln_1p() / u;
    let quad = integrate(&integrand, 0.0, 1.0, DEFAULT_TOL)?;

    // Route 2: the dilogarithm sum over all roots with multiplicity. For
    // real coefficients the sum must be real up to pairing noise.
    let mut acc = Complex64::new(0.0, 0.0);
    for r in &roots {
        acc -= dilog(1.0 / r)?;
    }
    if acc.im.abs() > 1e-10 {
        return Err(Error::IdentityViolation(format!(
            "dilogarithm root sum has imaginary part {:.3e}",
            acc.im
        )));
    }

    Ok(ConstantReport {
        value_quadrature: quad.value,
        value_dilog: acc.re,
        abs_gap: (quad.value - acc.re).abs(),
    })
}

/// `D_P = -int_0^inf P^(0,1)(e^-x, 1) / P(e^-x, 1) dx` for a bivariate
/// polynomial with `P(0, y) = 1` and `P(x, 1)` nonvanishing on `[0, 1]`.
pub fn d_constant(p: &IntBiPoly) -> Result<f64> {
    if p.eval_x(&Int::zero()) != UniPoly::one() {
        return Err(Error::Precondition("d_constant requires P(0, y) = 1".into()));
    }
    let px1 = p.eval_y(&Int::one());
    if px1.degree() >= 1 {
        check_no_roots_on_unit_interval(&poly_roots(&px1)?)?;
    }
    let py1 = p.partial_y().eval_y(&Int::one());
    if py1.is_zero() {
        return Ok(0.0);
    }
    // P(0, y) = 1 forces P^(0,1)(0, 1) = 0, so P^(0,1)(u, 1)/u is a
    // polynomial; with u = e^-x the integral becomes
    // -int_0^1 [P^(0,1)(u,1)/u] / P(u,1) du.
    debug_assert!(py1.coeff(0).is_zero());
    let shifted = UniPoly::new(py1.coeffs()[1..].to_vec());
    let integrand = |u: f64| -shifted.eval_f64(u) / px1.eval_f64(u);
    let quad = integrate(&integrand, 0.0, 1.0, DEFAULT_TOL)?;
    Ok(quad.value)
}

fn ln_factorial(d: usize) -> f64 {
    if d <= 1 {
        0.0
    } else {
        ln_bigint(&factorial(d))
    }
}

/// Parameters for the Schmidt-size counting sequence `s_d(n)`:
/// `lambda = (2 pi)^{-(d+1)/2} (d!)^{-1/2}`, `beta = (d+1)/2`,
/// `gamma = C_d + pi^2 (d+1)/6`.
pub fn schmidt_params(d: usize) -> Result<AsymParams> {
    assert!(d >= 1);
    let c_d = c_constant(&eulerian_poly(d))?.value();
    let lambda = (-(d as f64 + 1.0) / 2.0 * (2.0 * PI).ln() - 0.5 * ln_factorial(d)).exp();
    let gamma = c_d + PI * PI * (d as f64 + 1.0) / 6.0;
    AsymParams::new(lambda, (d as f64 + 1.0) / 2.0, gamma)
}

/// Parameters for the size counting sequence `r_d(n)`:
/// `lambda = (2 pi)^{-1/2} (d!)^{(d-1)/(2(d+1))} (d!)^{-d/(2(d+1))}
///         = (2 pi)^{-1/2} (d!)^{-1/(2(d+1))}`,
/// `beta = 1/2`, `gamma = C_d/(d+1) + pi^2/6`.
pub fn size_params(d: usize) -> Result<AsymParams> {
    assert!(d >= 1);
    let c_d = c_constant(&eulerian_poly(d))?.value();
    let dd = d as f64;
    let lambda = (-0.5 * (2.0 * PI).ln() - ln_factorial(d) / (2.0 * (dd + 1.0))).exp();
    let gamma = c_d / (dd + 1.0) + PI * PI / 6.0;
    AsymParams::new(lambda, 0.5, gamma)
}

/// Match `(1 - x)^k`; such factors are Dedekind-eta-type and are handled by
/// the eta asymptotic rather than the polynomial route.
fn eta_power(q: &IntBiPoly) -> Option<usize> {
    if q.deg_y() != 0 || q.deg_x() == 0 {
        return None;
    }
    let k = q.deg_x();
    let expect = {
        let one_minus_x = UniPoly::new(vec![Int::one(), Int::from(-1)]);
        one_minus_x.pow(k)
    };
    let as_uni = q.eval_y(&Int::one());
    (as_uni == expect).then_some(k)
}

/// Lanczos approximation of the Gamma function for positive arguments.
fn gamma_fn(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEFFS: [f64; 9] = [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    assert!(x > 0.0, "gamma_fn requires a positive argument");
    if x < 0.5 {
        // reflection
        return PI / ((PI * x).sin() * gamma_fn(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

/// Parameters for a general product `prod P(q^{An+a}, q) / Q(q^{Bn+b}, q)`.
///
/// The numerator contributes `gamma += C_P/A`, `lambda *= P(1,1)^{1/2-a/A}
/// e^{D_P/A}`. A polynomial denominator contributes the mirror image. A
/// denominator factor `(1-x)^k` is a generalized eta product
/// `prod_n (1 - q^{Bn+b})^k`, outside the polynomial theorem's hypotheses
/// (`Q(1,1) = 0`); each such factor contributes `gamma += pi^2/(6B)`,
/// `beta += b/B - 1/2` and `lambda *= Gamma(b/B) (2 pi)^{-1/2} B^{b/B-1/2}`.
pub fn general_params(spec: &ProductSpec) -> Result<AsymParams> {
    let mut log_lambda = 0.0;
    let mut beta = 0.0;
    let mut gamma = 0.0;

    // numerator
    let p1 = spec.p.eval_y(&Int::one());
    let p11 = p1.eval(&Int::one());
    if !(p11.is_positive()) {
        return Err(Error::Precondition(format!(
            "P(1,1) = {p11} must be positive"
        )));
    }
    let c_p = c_constant(&p1)?.value();
    let d_p = d_constant(&spec.p)?;
    let a_frac = spec.offset_p as f64 / spec.step_p as f64;
    gamma += c_p / spec.step_p as f64;
    log_lambda += (0.5 - a_frac) * ToPrimitive::to_f64(&p11).unwrap().ln() + d_p / spec.step_p as f64;

    // denominator
    match eta_power(&spec.q) {
        Some(k) => {
            let kf = k as f64;
            let bb = spec.step_q as f64;
            if spec.offset_q == 0 {
                return Err(Error::DivergentFactor {
                    index: 0,
                    constant: "0".into(),
                });
            }
            let c = spec.offset_q as f64 / bb;
            gamma += kf * PI * PI / (6.0 * bb);
            beta += kf * (c - 0.5);
            log_lambda +=
                kf * (gamma_fn(c).ln() - 0.5 * (2.0 * PI).ln() + (c - 0.5) * bb.ln());
        }
        None => {
            let q1 = spec.q.eval_y(&Int::one());
            if q1.degree() >= 1 || q1.coeff(0) != Int::one() {
                let q11 = q1.eval(&Int::one());
                if !(q11.is_positive()) {
                    return Err(Error::Precondition(format!(
                        "Q(1,1) = {q11} must be positive (or Q an eta factor (1-x)^k)"
                    )));
                }
                let c_q = c_constant(&q1)?.value();
                let d_q = d_constant(&spec.q)?;
                let b_frac = spec.offset_q as f64 / spec.step_q as f64;
                gamma -= c_q / spec.step_q as f64;
                log_lambda += (b_frac - 0.5) * ToPrimitive::to_f64(&q11).unwrap().ln() - d_q / spec.step_q as f64;
            }
        }
    }

    AsymParams::new(log_lambda.exp(), beta, gamma)
}

/// `log b(n)` of the Tauberian evaluator; exponentiation is left to callers
/// because `exp(2 sqrt(gamma n))` overflows doubles for large `n`.
pub fn ingham_eval(params: &AsymParams, n: usize) -> f64 {
    assert!(n >= 1);
    let nf = n as f64;
    params.lambda.ln() + (params.beta / 2.0 + 0.25) * params.gamma.ln()
        - (2.0 * PI.sqrt()).ln()
        - (params.beta / 2.0 + 0.75) * nf.ln()
        + 2.0 * (params.gamma * nf).sqrt()
}

/// Exact Euler–Maclaurin expansion of `log prod_{n>=1} A_d(e^{-nw})`:
/// the assembled terms `-B_{n+1}(1) f_d^{(n)}(0) / (n+1)!` for
/// `f_d(z) = log A_d(e^{-z})`.
///
/// The `n = 0` term is `log_factorial_coeff * log(d!)`; the coefficient must
/// be `-1/2`. The `n = 1` term must equal `(d-1)/24` and every later term
/// must vanish identically — equivalently, `f_d(z) + (d-1)z/2` is even.
#[derive(Clone, Debug)]
pub struct EmExpansion {
    pub d: usize,
    /// Coefficient of `log(d!)` in the constant term; always `-1/2`.
    pub log_factorial_coeff: Rat,
    /// Coefficient of `w`; equals `(d-1)/24`.
    pub linear: Rat,
    /// Coefficients of `w^n` for `n = 2..=k_max`; all exactly zero.
    pub higher: Vec<Rat>,
}

/// Compute and verify the expansion; `k_max <= 24`.
pub fn em_expansion_log_product(d: usize, k_max: usize) -> Result<EmExpansion> {
    assert!(d >= 1);
    if k_max > 24 {
        return Err(Error::Precondition(format!(
            "expansion order {k_max} exceeds the supported bound 24"
        )));
    }
    let a = eulerian_poly(d);
    let taylor = exp_substitute(&a, k_max);
    let log = log_series(&taylor)?;
    if log.constant_arg != factorial(d).to_rat() {
        return Err(Error::IdentityViolation(format!(
            "constant term of A_{d}(e^-z) is not {d}!"
        )));
    }

    let one = Rat::one();
    // term n: -B_{n+1}(1) f^{(n)}(0) / (n+1)! with f^{(n)}(0) = n! tail_n,
    // i.e. -B_{n+1}(1) tail_n / (n+1).
    let term = |n: usize| -> Result<Rat> {
        let b = bernoulli_poly(n + 1, &one)?;
        Ok(-b * log.tail.coeff(n) / Rat::from_integer(((n + 1) as i64).into()))
    };

    let log_factorial_coeff = -bernoulli_poly(1, &one)?; // -B_1(1) = -1/2
    if log_factorial_coeff != Rat::new((-1).into(), 2.into()) {
        return Err(Error::IdentityViolation("B_1(1) != 1/2".into()));
    }

    let linear = term(1)?;
    let expect_linear = Rat::new((d as i64 - 1).into(), 24.into());
    if linear != expect_linear {
        return Err(Error::IdentityViolation(format!(
            "w-coefficient for d={d} is {linear}, expected {expect_linear}"
        )));
    }

    let mut higher = Vec::new();
    for n in 2..=k_max {
        let t = term(n)?;
        if !t.is_zero() {
            return Err(Error::IdentityViolation(format!(
                "w^{n}-coefficient for d={d} is {t}, expected 0"
            )));
        }
        higher.push(t);
    }
    Ok(EmExpansion {
        d,
        log_factorial_coeff,
        linear,
        higher,
    })
}

/// Coefficients `kappa_0..kappa_j_max` of the small-`w` expansion
/// `log G_d(e^{-w}) = C_d/((d+1)w) + sum_j kappa_j w^j + O(w^{j_max+1})`,
/// where `G_d(q) = prod_{n>=0} F_d(q^{(d+1)n+1}, q)`.
///
/// Obtained by Euler–Maclaurin summation with shift `a = 1/(d+1)` and step
/// `W = (d+1)w` applied to `g_w(z) = log F_d(e^{-z}, e^{-w})`:
/// the coefficient of `w^j` is
/// `I_{j+1}/(d+1) - sum_{m=0}^{j} B_{m+1}(a) (d+1)^m /(m+1) L[m, j-m]`,
/// with `I_k = int_0^1 ([w^k] log F_d(u, e^{-w})) du/u` and `L[m, k]` the
/// Taylor coefficient of `z^m w^k` in `log F_d(e^{-z}, e^{-w})`.
pub fn g_expansion_coeffs(d: usize, j_max: usize) -> Result<Vec<f64>> {
    assert!(d >= 1);
    let fam = deformed_poly(d)?;
    let f = &fam.f;
    let shift = Rat::new(1.into(), (d as i64 + 1).into());
    let step = d as f64 + 1.0;

    // Bivariate Taylor of F_d(e^{-z}, e^{-w}): [z^s w^t] = sum f_ij (-i)^s (-j)^t / (s! t!)
    let rect = j_max + 1;
    let taylor = bivariate_exp_taylor(f, rect, rect);
    // log: split log(d!) off and expand log(1 + R) with R = T/d! - 1.
    let dfact = factorial(d).to_rat();
    let mut r = taylor.map_coeffs(|c| c / dfact.clone());
    r = r - BiPoly::constant(Rat::one());
    let mut log_rat = BiPoly::zero();
    let mut power = BiPoly::constant(Rat::one());
    for k in 1..=2 * rect {
        power = truncate_rect(&(power * r.clone()), rect, rect);
        let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
        log_rat = log_rat + power.map_coeffs(|c| c * sign.clone() / Rat::from_integer((k as i64).into()));
    }

    // w-slice integrals I_k for k = 1..=j_max+1. I_1 is the D-constant.
    let mut slice_integrals = vec![0.0; j_max + 2];
    slice_integrals[1] = d_constant(f)?;
    if j_max >= 1 {
        // c_t(u) = [w^t] F_d(u, e^{-w}) as exact polynomials in u
        let c_polys: Vec<crate::RatPoly> = (0..=j_max + 1)
            .map(|t| w_slice_poly(f, t))
            .collect();
        for k in 2..=j_max + 1 {
            let integrand = |u: f64| {
                let c: Vec<f64> = c_polys.iter().map(|p| p.eval_f64(u)).collect();
                log_coefficient(&c, k) / u
            };
            slice_integrals[k] = integrate(&integrand, 0.0, 1.0, DEFAULT_TOL)?.value;
        }
    }

    let ln_dfact = ln_factorial(d);
    let mut kappa = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let mut acc = slice_integrals[j + 1] / step;
        for m in 0..=j {
            let b = crate::ring::rat_to_f64(&bernoulli_poly(m + 1, &shift)?);
            let l_coeff = if m == 0 && j == 0 {
                ln_dfact
            } else {
                crate::ring::rat_to_f64(&log_rat.coeff(m, j - m))
            };
            acc -= b * step.powi(m as i32) / (m as f64 + 1.0) * l_coeff;
        }
        kappa.push(acc);
    }
    Ok(kappa)
}

/// `[z^s w^t]`-rectangle of the Taylor expansion of `P(e^{-z}, e^{-w})`.
fn bivariate_exp_taylor(p: &IntBiPoly, max_s: usize, max_t: usize) -> RatBiPoly {
    let mut rows = vec![vec![Rat::zero(); max_t + 1]; max_s + 1];
    let mut s_fact = Rat::one();
    for (s, row) in rows.iter_mut().enumerate() {
        if s > 0 {
            s_fact *= Rat::from_integer((s as i64).into());
        }
        let mut t_fact = Rat::one();
        for (t, slot) in row.iter_mut().enumerate() {
            if t > 0 {
                t_fact *= Rat::from_integer((t as i64).into());
            }
            let mut acc = Rat::zero();
            for (i, j, c) in p.terms() {
                let zi = Rat::from_integer((-(i as i64)).into());
                let wj = Rat::from_integer((-(j as i64)).into());
                acc += c.to_rat() * pow_rat(&zi, s) * pow_rat(&wj, t);
            }
            *slot = acc / (s_fact.clone() * t_fact.clone());
        }
    }
    BiPoly::new(rows)
}

fn pow_rat(r: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r.clone();
    }
    acc
}

fn truncate_rect(p: &RatBiPoly, max_s: usize, max_t: usize) -> RatBiPoly {
    let rows = (0..=max_s.min(p.deg_x()))
        .map(|i| (0..=max_t).map(|j| p.coeff(i, j)).collect())
        .collect();
    BiPoly::new(rows)
}

/// `[w^t] P(u, e^{-w})` as an exact polynomial in `u`.
fn w_slice_poly(p: &IntBiPoly, t: usize) -> crate::RatPoly {
    let mut t_fact = Rat::one();
    for k in 2..=t {
        t_fact *= Rat::from_integer((k as i64).into());
    }
    let mut coeffs = vec![Rat::zero(); p.deg_x() + 1];
    for (i, j, c) in p.terms() {
        let wj = Rat::from_integer((-(j as i64)).into());
        coeffs[i] += c.to_rat() * pow_rat(&wj, t) / t_fact.clone();
    }
    UniPoly::new(coeffs)
}

/// `[w^k] log(c_0 + c_1 w + ...)` from numeric slice values, `c_0 > 0`.
fn log_coefficient(c: &[f64], k: usize) -> f64 {
    // l_k = t_k - (1/k) sum_{j=1}^{k-1} j l_j t_{k-j}, t_i = c_i / c_0
    let t: Vec<f64> = c.iter().map(|x| x / c[0]).collect();
    let mut l = vec![0.0; k + 1];
    for m in 1..=k {
        let mut acc = t[m];
        for j in 1..m {
            acc -= (j as f64) * l[j] * t[m - j] / (m as f64);
        }
        l[m] = acc;
    }
    l[k]
}

/// One row of the product-asymptotic check: relative errors of the
/// truncated products against their closed asymptotic forms.
#[derive(Clone, Copy, Debug)]
pub struct ProductAsymRow {
    pub w: f64,
    pub f_rel_err: f64,
    pub g_rel_err: f64,
}

/// Numerically evaluate the truncated products `F_d(e^{-w})` (over
/// `A_d(e^{-nw})`) and `G_d(e^{-w})` (over `F_d(e^{-((d+1)n+1)w}, e^{-w})`)
/// with tail cutoff `N(w) = ceil(40/w)`, and report relative error against
/// the closed forms `exp(C_d/w - log(d!)/2 + (d-1)w/24)` and
/// `exp(C_d/((d+1)w) + kappa_0 + kappa_1 w + kappa_2 w^2 + kappa_3 w^3)`.
pub fn product_asym_check(d: usize, w_grid: &[f64]) -> Result<Vec<ProductAsymRow>> {
    assert!(d >= 1);
    for &w in w_grid {
        if !(w > 0.0 && w <= 0.5) {
            return Err(Error::Precondition(format!(
                "w = {w} outside the supported grid (0, 0.5]"
            )));
        }
    }
    let a = eulerian_poly(d);
    let f = deformed_poly(d)?.f;
    let c_d = c_constant(&a)?;
    if !c_d.is_consistent() {
        return Err(Error::IdentityViolation(format!(
            "dual routes for C_{d} disagree by {:.3e}",
            c_d.abs_gap
        )));
    }
    let c_d = c_d.value_dilog; // the more accurate route; gap checked above
    let ln_dfact = ln_factorial(d);
    let kappa = g_expansion_coeffs(d, 3)?;

    let mut rows = Vec::with_capacity(w_grid.len());
    for &w in w_grid {
        let cutoff = (40.0 / w).ceil() as usize;

        let mut log_f = 0.0;
        for n in (1..=cutoff).rev() {
            let x = (-(n as f64) * w).exp();
            log_f += a.eval_f64_tail(x).ln_1p();
        }
        let closed_f = c_d / w - 0.5 * ln_dfact + (d as f64 - 1.0) / 24.0 * w;
        let f_rel_err = (log_f - closed_f).exp_m1().abs();

        let mut log_g = 0.0;
        let y = (-w).exp();
        for n in (0..=cutoff).rev() {
            let x = (-(((d + 1) * n + 1) as f64) * w).exp();
            log_g += f.eval_f64_tail(x, y).ln_1p();
        }
        let step = d as f64 + 1.0;
        let closed_g = c_d / (step * w)
            + kappa[0]
            + kappa[1] * w
            + kappa[2] * w * w
            + kappa[3] * w * w * w;
        let g_rel_err = (log_g - closed_g).exp_m1().abs();

        rows.push(ProductAsymRow {
            w,
            f_rel_err,
            g_rel_err,
        });
    }
    Ok(rows)
}

/// One row of an exact-versus-asymptotic comparison.
#[derive(Clone, Copy, Debug)]
pub struct CompareRow {
    pub n: usize,
    pub exact_log: f64,
    pub asym_log: f64,
    pub log_ratio: f64,
}

/// Comparison table result; grid points with zero coefficient are skipped
/// and recorded.
#[derive(Clone, Debug)]
pub struct CompareTable {
    pub rows: Vec<CompareRow>,
    pub skipped: Vec<usize>,
}

/// Join exact coefficients to the Tauberian evaluator on a grid of indices.
pub fn compare_exact_vs_asym(
    series: &IntSeries,
    params: &AsymParams,
    grid: &[usize],
) -> Result<CompareTable> {
    let mut rows = Vec::with_capacity(grid.len());
    let mut skipped = Vec::new();
    for &n in grid {
        if n < 1 || n > series.order() {
            return Err(Error::Precondition(format!(
                "grid point {n} outside [1, {}]",
                series.order()
            )));
        }
        let c = series.coeff(n);
        if c.is_zero() {
            skipped.push(n);
            continue;
        }
        if c.is_negative() {
            return Err(Error::Precondition(format!(
                "coefficient at {n} is negative; comparison is for counting sequences"
            )));
        }
        let exact_log = ln_bigint(&c);
        let asym_log = ingham_eval(params, n);
        rows.push(CompareRow {
            n,
            exact_log,
            asym_log,
            log_ratio: exact_log - asym_log,
        });
    }
    Ok(CompareTable { rows, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_unipoly;

    const TAU: f64 = 2.0 * PI;

    #[test]
    fn c_one_is_exactly_zero() {
        let report = c_constant(&eulerian_poly(1)).unwrap();
        assert_eq!(report.value_quadrature, 0.0);
        assert_eq!(report.value_dilog, 0.0);
        assert_eq!(report.abs_gap, 0.0);
    }

    #[test]
    fn c_two_is_pi_squared_over_twelve() {
        let report = c_constant(&eulerian_poly(2)).unwrap();
        let expect = PI * PI / 12.0;
        assert!((report.value_quadrature - expect).abs() < 1e-10);
        assert!((report.value_dilog - expect).abs() < 1e-12);
        assert!(report.is_consistent());
    }

    #[test]
    fn dual_route_agreement_for_eulerian() {
        for d in 2..=8 {
            let report = c_constant(&eulerian_poly(d)).unwrap();
            assert!(
                report.abs_gap < DUAL_ROUTE_TOL,
                "gap {} at d={d}",
                report.abs_gap
            );
        }
    }

    #[test]
    fn cyclotomic_closed_form() {
        for ell in [2usize, 3, 5, 7] {
            let phi = UniPoly::new(vec![Int::one(); ell]);
            let report = c_constant(&phi).unwrap();
            let expect = PI * PI * (ell as f64 - 1.0) / (6.0 * ell as f64);
            assert!(
                (report.value_quadrature - expect).abs() < 1e-9,
                "quadrature off for ell={ell}: {} vs {expect}",
                report.value_quadrature
            );
            assert!((report.value_dilog - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_zero_on_unit_interval() {
        // 1 - x vanishes at 1; 2x^2-3x+1 = (2x-1)(x-1) vanishes inside
        for text in ["1-x", "1-3x+2x^2"] {
            let p = parse_unipoly(text).unwrap();
            assert!(matches!(
                c_constant(&p),
                Err(Error::ZeroOnUnitInterval(_))
            ));
        }
    }

    #[test]
    fn d_constant_values() {
        assert_eq!(d_constant(&deformed_poly(1).unwrap().f).unwrap(), 0.0);
        let d2 = d_constant(&deformed_poly(2).unwrap().f).unwrap();
        assert!((d2 + (2.0f64).ln()).abs() < 1e-10, "{d2}");
        for d in 2..=5 {
            let dd = d_constant(&deformed_poly(d).unwrap().f).unwrap();
            let expect = -(d as f64) / 2.0 * ln_factorial(d);
            assert!((dd - expect).abs() < 1e-9, "d={d}: {dd} vs {expect}");
        }
    }

    #[test]
    fn schmidt_params_small_d() {
        let p1 = schmidt_params(1).unwrap();
        assert!((p1.gamma - PI * PI / 3.0).abs() < 1e-12);
        assert_eq!(p1.beta, 1.0);
        assert!((p1.lambda - 1.0 / TAU).abs() < 1e-15);

        let p2 = schmidt_params(2).unwrap();
        assert!((p2.gamma - 7.0 * PI * PI / 12.0).abs() < 1e-10);
        assert_eq!(p2.beta, 1.5);
    }

    #[test]
    fn size_params_small_d() {
        let p1 = size_params(1).unwrap();
        assert!((p1.lambda - 1.0 / TAU.sqrt()).abs() < 1e-15);
        assert_eq!(p1.beta, 0.5);
        assert!((p1.gamma - PI * PI / 6.0).abs() < 1e-12);

        let p2 = size_params(2).unwrap();
        assert!((p2.gamma - 7.0 * PI * PI / 36.0).abs() < 1e-10);
    }

    #[test]
    fn hardy_ramanujan_reduction() {
        let params = size_params(1).unwrap();
        for n in [10usize, 100, 1000] {
            let nf = n as f64;
            let hr = -(4.0 * nf * 3.0f64.sqrt()).ln() + PI * (2.0 * nf / 3.0).sqrt();
            let got = ingham_eval(&params, n);
            assert!((got - hr).abs() < 1e-12, "n={n}: {got} vs {hr}");
        }
    }

    #[test]
    fn ingham_direct_substitution() {
        let params = AsymParams::new(1.0, 0.0, 1.0).unwrap();
        let expect = (1.0 / (2.0 * PI.sqrt())).ln() + 2.0;
        assert!((ingham_eval(&params, 1) - expect).abs() < 1e-15);
    }

    #[test]
    fn general_params_matches_family_params() {
        for d in 1..=3 {
            let spec = ProductSpec::size(d).unwrap();
            let general = general_params(&spec).unwrap();
            let direct = size_params(d).unwrap();
            assert!(
                (general.lambda - direct.lambda).abs() < 1e-10,
                "lambda d={d}: {} vs {}",
                general.lambda,
                direct.lambda
            );
            assert!((general.beta - direct.beta).abs() < 1e-12);
            assert!((general.gamma - direct.gamma).abs() < 1e-10);

            let spec = ProductSpec::schmidt(d).unwrap();
            let general = general_params(&spec).unwrap();
            let direct = schmidt_params(d).unwrap();
            assert!(
                (general.lambda - direct.lambda).abs() < 1e-10,
                "schmidt lambda d={d}: {} vs {}",
                general.lambda,
                direct.lambda
            );
            assert!((general.beta - direct.beta).abs() < 1e-12);
            assert!((general.gamma - direct.gamma).abs() < 1e-10);
        }
    }

    #[test]
    fn general_params_univariate_case() {
        let spec = ProductSpec::new(
            parse_unipoly("1+x").unwrap().to_bipoly(),
            BiPoly::one(),
            1,
            1,
            1,
            1,
        )
        .unwrap();
        let params = general_params(&spec).unwrap();
        assert!((params.lambda - 0.5f64.sqrt()).abs() < 1e-12);
        assert_eq!(params.beta, 0.0);
        assert!((params.gamma - PI * PI / 12.0).abs() < 1e-10);
    }

    #[test]
    fn hypothesis_gate_rejects_nonpositive_gamma() {
        // C_P/A = pi^2/24 < C_Q/B = pi^2/12
        let spec = ProductSpec::new(
            parse_unipoly("1+x").unwrap().to_bipoly(),
            parse_unipoly("1+x").unwrap().to_bipoly(),
            2,
            1,
            1,
            1,
        )
        .unwrap();
        assert!(matches!(
            general_params(&spec),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn em_expansion_values() {
        let em = em_expansion_log_product(3, 12).unwrap();
        assert_eq!(em.linear, Rat::new(1.into(), 12.into()));
        assert_eq!(em.log_factorial_coeff, Rat::new((-1).into(), 2.into()));

        let em = em_expansion_log_product(1, 12).unwrap();
        assert!(em.linear.is_zero());
        assert!(em.higher.iter().all(|t| t.is_zero()));

        for d in 2..=5 {
            let em = em_expansion_log_product(d, 12).unwrap();
            assert_eq!(em.linear, Rat::new((d as i64 - 1).into(), 24.into()));
            assert!(em.higher.iter().all(|t| t.is_zero()));
        }

        assert!(em_expansion_log_product(2, 25).is_err());
    }

    #[test]
    fn g_expansion_matches_single_shift_oracle_for_d2() {
        // For d = 2 the product is prod_n (1 + e^{-(3n+2)w}), a pure
        // shifted sum of h(x) = log(1 + e^{-x}) with shift 2/3 and step 3w:
        // kappa_j = -B_{j+1}(2/3) h^{(j)}(0) 3^j / (j+1)!.
        let kappa = g_expansion_coeffs(2, 3).unwrap();
        let h = log_series(&exp_substitute(&parse_unipoly("1+x").unwrap(), 6)).unwrap();
        let shift = Rat::new(2.into(), 3.into());
        let expect_0 = crate::ring::rat_to_f64(&-bernoulli_poly(1, &shift).unwrap())
            * (2.0f64).ln();
        assert!((kappa[0] - expect_0).abs() < 1e-12, "{} vs {expect_0}", kappa[0]);
        for j in 1..=3 {
            // h^{(j)}(0)/j! = tail_j, so the oracle term is
            // -B_{j+1}(2/3) tail_j 3^j / (j+1)
            let b = crate::ring::rat_to_f64(&bernoulli_poly(j + 1, &shift).unwrap());
            let tail = crate::ring::rat_to_f64(&h.tail.coeff(j));
            let expect = -b * tail * 3.0f64.powi(j as i32) / (j as f64 + 1.0);
            assert!(
                (kappa[j] - expect).abs() < 1e-10,
                "kappa_{j}: {} vs {expect}",
                kappa[j]
            );
        }
        // frozen: kappa_0 = -log(2)/6, kappa_1 = -1/24, kappa_2 = 1/72
        assert!((kappa[0] + (2.0f64).ln() / 6.0).abs() < 1e-12);
        assert!((kappa[1] + 1.0 / 24.0).abs() < 1e-10);
        assert!((kappa[2] - 1.0 / 72.0).abs() < 1e-10);
    }

    #[test]
    fn product_asym_check_basics() {
        // d = 1: both products are governed by exactly known forms; F_1 = 1
        // makes the F-product literally 1 with closed form 1.
        let rows = product_asym_check(1, &[0.1]).unwrap();
        assert_eq!(rows[0].f_rel_err, 0.0);

        let rows = product_asym_check(2, &[0.1, 0.05]).unwrap();
        for row in &rows {
            assert!(row.f_rel_err < 1e-9, "F error {} at w={}", row.f_rel_err, row.w);
            assert!(row.g_rel_err < 1e-5, "G error {} at w={}", row.g_rel_err, row.w);
        }
        assert!(rows[1].g_rel_err < rows[0].g_rel_err);

        assert!(product_asym_check(2, &[0.7]).is_err());
    }

    #[test]
    fn compare_monotone_for_partitions() {
        let series = crate::qseries::size_series(1, 800).unwrap();
        let params = size_params(1).unwrap();
        let table = compare_exact_vs_asym(&series, &params, &[100, 200, 400, 800]).unwrap();
        assert!(table.skipped.is_empty());
        let ratios: Vec<f64> = table.rows.iter().map(|r| r.log_ratio.abs()).collect();
        assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");

        assert!(compare_exact_vs_asym(&series, &params, &[801]).is_err());
    }
}
