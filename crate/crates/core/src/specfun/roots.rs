//! Simultaneous polynomial root finding (Aberth–Ehrlich iteration).
//!
//! All roots are refined together from perturbed-circle starting points, so
//! there is no deflation and no accumulation of deflation error. For
//! real-coefficient input the returned roots come in exact conjugate pairs.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::Scalar;
use num_complex::Complex64;

const MAX_ITERATIONS: usize = 400;

/// All complex roots (with multiplicity) of a polynomial given by its
/// `f64` coefficients in ascending degree.
pub fn roots_f64(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let coeffs: Vec<f64> = {
        let mut c = coeffs.to_vec();
        while c.last().is_some_and(|&x| x == 0.0) {
            c.pop();
        }
        c
    };
    assert!(coeffs.len() >= 2, "poly_roots requires degree >= 1");
    let n = coeffs.len() - 1;
    let lead = coeffs[n];

    // Strip zero roots at the origin first.
    let mut zero_roots = 0;
    while zero_roots < n && coeffs[zero_roots] == 0.0 {
        zero_roots += 1;
    }
    let reduced: Vec<f64> = coeffs[zero_roots..].to_vec();
    let deg = reduced.len() - 1;

    let mut roots = vec![Complex64::new(0.0, 0.0); zero_roots];
    if deg > 0 {
        roots.extend(aberth(&reduced)?);
    }

    let refined = refine_clusters(&coeffs, roots);
    // Enforce conjugate pairing (the input is real).
    let paired = pair_conjugates(refined);

    // Residual acceptance: |p(z)| against the local derivative scale for
    // simple roots; for clustered/multiple roots (p'(z) ~ 0 too) fall back
    // to the backward error against the evaluation magnitude, which is at
    // rounding level exactly when the approximant is backward stable.
    let mut worst: f64 = 0.0;
    for &z in &paired {
        let (p, dp, scale) = eval_with_derivative(&coeffs, z);
        let forward = p.norm() / (dp.norm() * (1.0 + z.norm()) + f64::MIN_POSITIVE);
        let backward = p.norm() / scale.max(lead.abs());
        if forward > 1e-10 && backward > 1e-12 {
            worst = worst.max(forward);
        }
    }
    if worst > 0.0 {
        return Err(Error::RootsNotConverged {
            residual: worst,
            iterations: MAX_ITERATIONS,
        });
    }
    Ok(paired)
}

/// All complex roots of an exact polynomial, found in double precision.
pub fn poly_roots<C: Scalar>(p: &UniPoly<C>) -> Result<Vec<Complex64>> {
    assert!(!p.is_zero() && p.degree() >= 1, "poly_roots requires degree >= 1");
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64()).collect();
    roots_f64(&coeffs)
}

/// Monic reconstruction `lead * prod (x - root_j)` for self-consistency
/// checks; returns real coefficient approximations.
pub fn reconstruct(lead: f64, roots: &[Complex64]) -> Vec<f64> {
    let mut coeffs = vec![Complex64::new(lead, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        coeffs = next;
    }
    coeffs.iter().map(|c| c.re).collect()
}

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let zn = z.norm();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * zn + c.abs();
    }
    (p, dp, scale)
}

fn aberth(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];

    // Initial guesses on a perturbed circle whose radius reflects the
    // geometric mean of the root moduli.
    let radius = (coeffs[0].abs() / lead.abs()).powf(1.0 / deg as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / (deg as f64) + 0.376;
            Complex64::from_polar(radius * (1.0 + 0.05 * (j as f64 % 3.0)), angle)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for j in 0..deg {
            let (p, dp, scale) = eval_with_derivative(coeffs, z[j]);
            if p.norm() <= 1e-16 * scale {
                continue; // already at evaluation noise level
            }
            let newton = if dp.norm() > 0.0 { p / dp } else { Complex64::new(1e-12, 0.0) };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for k in 0..deg {
                if k != j {
                    let diff = z[j] - z[k];
                    if diff.norm() > 1e-300 {
                        repulsion += 1.0 / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            z[j] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[j].norm()));
        }
        if max_step < 1e-14 {
            return Ok(z);
        }
    }
    // fall through with the current approximants; the residual gate in
    // roots_f64 decides whether they are acceptable
    Ok(z)
}

/// A multiple root of multiplicity m leaves simultaneous iteration stuck in
/// a cluster of radius ~ eps^(1/m) whose symmetric functions are only
/// eps^(1/m)-accurate. Collapse each detected cluster onto the root of the
/// (m-1)-th derivative (where the multiple root is simple, so Newton reaches
/// machine precision) and keep the collapsed set only if it reconstructs the
/// input coefficients at least as well.
fn refine_clusters(coeffs: &[f64], roots: Vec<Complex64>) -> Vec<Complex64> {
    let n = roots.len();
    if n < 2 {
        return roots;
    }
    // union-find grouping by proximity
    let mut group: Vec<usize> = (0..n).collect();
    fn find(group: &mut Vec<usize>, i: usize) -> usize {
        let mut r = i;
        while group[r] != r {
            r = group[r];
        }
        let mut c = i;
        while group[c] != c {
            let next = group[c];
            group[c] = r;
            c = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let tol = 1e-5 * (1.0 + roots[i].norm());
            if (roots[i] - roots[j]).norm() < tol {
                let (a, b) = (find(&mut group, i), find(&mut group, j));
                group[a] = b;
            }
        }
    }
    let mut members: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut group, i);
        members.entry(r).or_default().push(i);
    }
    if members.values().all(|m| m.len() == 1) {
        return roots;
    }

    let mut candidate = roots.clone();
    for idxs in members.values() {
        let m = idxs.len();
        if m < 2 {
            continue;
        }
        let centroid = idxs.iter().map(|&i| roots[i]).sum::<Complex64>() / m as f64;
        // (m-1)-th derivative coefficients
        let mut dc: Vec<f64> = coeffs.to_vec();
        for _ in 0..m - 1 {
            dc = dc
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect();
        }
        let mut z = centroid;
        for _ in 0..50 {
            let (p, dp, _) = eval_with_derivative(&dc, z);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            z -= step;
            if step.norm() <= 1e-16 * (1.0 + z.norm()) {
                break;
            }
        }
        for &i in idxs {
            candidate[i] = z;
        }
    }

    let lead = *coeffs.last().unwrap();
    let scale = coeffs.iter().fold(0.0f64, |a, &c| a.max(c.abs()));
    let backward = |set: &[Complex64]| -> f64 {
        reconstruct(lead, set)
            .iter()
            .zip(coeffs.iter())
            .map(|(&r, &c)| (r - c).abs())
            .fold(0.0f64, f64::max)
            / scale
    };
    if backward(&candidate) <= backward(&roots) {
        candidate
    } else {
        roots
    }
}

/// Snap near-real roots onto the axis and average conjugate partners so the
/// output is exactly closed under conjugation.
fn pair_conjugates(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    for r in roots.iter_mut() {
        if r.im.abs() <= 1e-10 * (1.0 + r.norm()) {
            r.im = 0.0;
        }
    }
    let mut out: Vec<Complex64> = Vec::with_capacity(roots.len());
    let mut upper: Vec<Complex64> = Vec::new();
    let mut lower: Vec<Complex64> = Vec::new();
    for r in roots {
        if r.im == 0.0 {
            out.push(r);
        } else if r.im > 0.0 {
            upper.push(r);
        } else {
            lower.push(r);
        }
    }
    // Greedy nearest-conjugate matching; leftovers are snapped to the axis.
    for u in upper {
        let mut best: Option<(usize, f64)> = None;
        for (i, l) in lower.iter().enumerate() {
            let d = (u - l.conj()).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((i, d));
            }
        }
        match best {
            Some((i, _)) => {
                let l = lower.swap_remove(i);
                let avg = 0.5 * (u + l.conj());
                out.push(avg);
                out.push(avg.conj());
            }
            None => out.push(Complex64::new(u.re, 0.0)),
        }
    }
    for l in lower {
        out.push(Complex64::new(l.re, 0.0));
    }
    out.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Int;

    fn int_poly(v: &[i64]) -> UniPoly<Int> {
        UniPoly::new(v.iter().map(|&x| Int::from(x)).collect())
    }

    fn max_coeff_error(p: &[i64], roots: &[Complex64]) -> f64 {
        let rebuilt = reconstruct(*p.last().unwrap() as f64, roots);
        let scale = p.iter().map(|&c| (c as f64).abs()).fold(0.0, f64::max);
        p.iter()
            .zip(rebuilt.iter())
            .map(|(&a, &b)| (a as f64 - b).abs() / scale)
            .fold(0.0, f64::max)
    }

    #[test]
    fn linear_and_quadratic() {
        let r = poly_roots(&int_poly(&[1, 1])).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-14);

        // 1 + 4x + x^2 has roots -2 +- sqrt(3)
        let r = poly_roots(&int_poly(&[1, 4, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let expect = [-2.0 - 3.0f64.sqrt(), -2.0 + 3.0f64.sqrt()];
        for (got, want) in r.iter().zip(expect.iter()) {
            assert!((got - Complex64::new(*want, 0.0)).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn eulerian_a6_reconstruction() {
        let a6 = crate::eulerian::eulerian_poly(6);
        let coeffs: Vec<i64> = [1, 57, 302, 302, 57, 1].to_vec();
        let roots = poly_roots(&a6).unwrap();
        assert_eq!(roots.len(), 5);
        // all roots of Eulerian polynomials are real and negative
        assert!(roots.iter().all(|r| r.im == 0.0 && r.re < 0.0));
        assert!(max_coeff_error(&coeffs, &roots) < 1e-9);
    }

    #[test]
    fn conjugate_pairs_are_exact() {
        // x^4 + x + 1 has two complex-conjugate pairs
        let roots = poly_roots(&int_poly(&[1, 1, 0, 0, 1])).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &roots {
            assert!(roots.iter().any(|s| *s == r.conj()));
        }
        assert!(max_coeff_error(&[1, 1, 0, 0, 1], &roots) < 1e-10);
    }

    #[test]
    fn multiple_roots_reconstruct() {
        // (1+x)^3 = 1 + 3x + 3x^2 + x^3
        let roots = poly_roots(&int_poly(&[1, 3, 3, 1])).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(max_coeff_error(&[1, 3, 3, 1], &roots) < 1e-9);
    }

    #[test]
    fn zero_roots_and_cyclotomics() {
        // x^2 (x^2 + 1)
        let roots = poly_roots(&int_poly(&[0, 0, 1, 0, 1])).unwrap();
        assert_eq!(roots.iter().filter(|r| r.norm() == 0.0).count(), 2);
        // Phi_7: roots on the unit circle
        let phi7 = int_poly(&[1, 1, 1, 1, 1, 1, 1]);
        let roots = poly_roots(&phi7).unwrap();
        for r in &roots {
            assert!((r.norm() - 1.0).abs() < 1e-12);
        }
        assert!(max_coeff_error(&[1, 1, 1, 1, 1, 1, 1], &roots) < 1e-10);
    }

    #[test]
    fn degree_twelve_random_reconstruction() {
        // deterministic "random" integer polynomials, lead nonzero
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 40) as i64 % 19) - 9
        };
        for _ in 0..10 {
            let mut coeffs: Vec<i64> = (0..13).map(|_| next()).collect();
            if coeffs[12] == 0 {
                coeffs[12] = 7;
            }
            if coeffs[0] == 0 {
                coeffs[0] = 3;
            }
            let roots = poly_roots(&int_poly(&coeffs)).unwrap();
            assert_eq!(roots.len(), 12);
            assert!(
                max_coeff_error(&coeffs, &roots) < 1e-9,
                "reconstruction failed for {coeffs:?}"
            );
        }
    }
}
