//! Adaptive Gauss–Legendre quadrature for smooth integrands.
//!
//! A 15-point rule is applied per panel; a panel is accepted when the
//! two-half refinement agrees with the single-panel estimate within its
//! share of the tolerance budget. Nodes are interior, so integrands only
//! defined on half-open intervals (finite limit at an endpoint) integrate
//! without special casing.

use crate::error::{Error, Result};
use std::sync::OnceLock;

const RULE_POINTS: usize = 15;
const MAX_DEPTH: usize = 52;

static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // Legendre P_n(x) and P'_n(x)
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0, x);
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    RULE.get_or_init(|| gauss_legendre(RULE_POINTS))
}

fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let (nodes, weights) = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for i in 0..RULE_POINTS {
        acc += weights[i] * f(mid + half * nodes[i]);
    }
    acc * half
}

/// Quadrature result: the value and the accumulated error estimate.
#[derive(Clone, Copy, Debug)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
}

/// Adaptive integration of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<Quadrature> {
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: usize,
        err_acc: &mut f64,
    ) -> Result<f64> {
        let mid = 0.5 * (a + b);
        let left = panel(f, a, mid);
        let right = panel(f, mid, b);
        let refined = left + right;
        let err = (refined - whole).abs();
        if err <= tol || err <= 1e-16 * refined.abs() {
            *err_acc += err;
            return Ok(refined);
        }
        if depth == 0 {
            return Err(Error::QuadratureNotConverged {
                achieved: err,
                requested: tol,
            });
        }
        let l = rec(f, a, mid, left, 0.5 * tol, depth - 1, err_acc)?;
        let r = rec(f, mid, b, right, 0.5 * tol, depth - 1, err_acc)?;
        Ok(l + r)
    }

    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Precondition("quadrature interval must be finite".into()));
    }
    let whole = panel(f, a, b);
    let mut err_acc = 0.0;
    let value = rec(f, a, b, whole, tol, MAX_DEPTH, &mut err_acc)?;
    Ok(Quadrature {
        value,
        error_estimate: err_acc,
    })
}

/// Default tolerance for the smooth-integrand entry point.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Integrate a continuous function on `(0, 1]` with a finite limit at `0+`.
pub fn quad_smooth<F: Fn(f64) -> f64>(f: &F, tol: f64) -> Result<Quadrature> {
    integrate(f, 0.0, 1.0, tol)
}
