//! Dense exact polynomials in one and two variables.
//!
//! [`UniPoly`] stores coefficients by ascending degree of `x`; [`BiPoly`]
//! stores a rectangle of coefficients for `x^i y^j`, kept tight to the true
//! bidegree. Both are generic over the coefficient ring and immutable after
//! construction: every operation returns a fresh value.

use crate::error::{Error, Result};
use crate::ring::Scalar;
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial; index `i` holds the coefficient of `x^i`.
///
/// Invariant: the trailing coefficient is nonzero unless the polynomial is
/// zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<C: Scalar> {
    coeffs: Vec<C>,
}

impl<C: Scalar> UniPoly<C> {
    /// Build from coefficients by ascending degree, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c * x^e`.
    pub fn monomial(c: C, e: usize) -> Self {
        let mut coeffs = vec![C::zero(); e + 1];
        coeffs[e] = c;
        UniPoly::new(coeffs)
    }

    pub fn variable() -> Self {
        UniPoly::monomial(C::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// d/dx.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| C::from_i64(i as i64) * c.clone())
            .collect();
        UniPoly::new(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64();
        }
        acc
    }

    /// `p(x) - p(0)` evaluated at `x`, i.e. the non-constant part. Summing the
    /// monomials directly avoids cancellation when `x` is small.
    pub fn eval_f64_tail(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().skip(1).rev() {
            acc = acc * x + c.to_f64();
        }
        acc * x
    }

    /// Coefficient reversal: `x^deg * p(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UniPoly::new(coeffs)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Exact long division; errors unless `rhs` divides `self` exactly
    /// (including every intermediate coefficient division).
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        if self.degree() < rhs.degree() {
            return Err(Error::InexactDivision(format!(
                "degree {} < divisor degree {}",
                self.degree(),
                rhs.degree()
            )));
        }
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - rhs.degree();
        let lead = rhs.coeffs.last().unwrap();
        let mut quot = vec![C::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + rhs.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(lead).ok_or_else(|| {
                Error::InexactDivision(format!("coefficient {} not divisible by {}", rem[k + rhs.degree()], lead))
            })?;
            for (j, r) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * r.clone();
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision("nonzero remainder".into()));
        }
        Ok(UniPoly::new(quot))
    }

    /// Lift to a bivariate polynomial constant in `y`.
    pub fn to_bipoly(&self) -> BiPoly<C> {
        BiPoly::new(self.coeffs.iter().map(|c| vec![c.clone()]).collect())
    }
}

impl<C: Scalar> Add for UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(C::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(C::zero);
            out.push(a + b);
        }
        UniPoly::new(out)
    }
}

impl<C: Scalar> Sub for UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Scalar> Neg for UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> Self {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<C: Scalar> Mul for UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<C: Scalar> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_terms(self.coeffs.iter().enumerate().map(|(i, c)| (i, 0, c)), false))
    }
}

impl<C: Scalar> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

/// Dense bivariate polynomial; entry `(i, j)` holds the coefficient of
/// `x^i y^j`. The stored rectangle is kept tight to the true bidegree.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly<C: Scalar> {
    /// Row `i` lists coefficients of `x^i y^j` by ascending `j`.
    rows: Vec<Vec<C>>,
}

impl<C: Scalar> BiPoly<C> {
    /// Build from rows (outer index = x-degree), trimming to a tight rectangle.
    pub fn new(mut rows: Vec<Vec<C>>) -> Self {
        for row in rows.iter_mut() {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        BiPoly::new(vec![vec![c]])
    }

    /// The monomial `c * x^i y^j`.
    pub fn monomial(c: C, i: usize, j: usize) -> Self {
        let mut rows = vec![Vec::new(); i + 1];
        rows[i] = vec![C::zero(); j + 1];
        rows[i][j] = c;
        BiPoly::new(rows)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn deg_x(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> C {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Iterate nonzero terms as `(i, j, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (i, j, c)))
            .filter(|(_, _, c)| !c.is_zero())
    }

    /// Partial derivative in `x`.
    pub fn partial_x(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, row)| row.iter().map(|c| C::from_i64(i as i64) * c.clone()).collect())
            .collect();
        BiPoly::new(rows)
    }

    /// Partial derivative in `y`.
    pub fn partial_y(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, c)| C::from_i64(j as i64) * c.clone())
                    .collect()
            })
            .collect();
        BiPoly::new(rows)
    }

    /// Substitution `x -> x * y^k`: sends `x^i y^j` to `x^i y^{j + k i}`.
    pub fn subst_x_times_y_pow(&self, k: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut out = vec![C::zero(); row.len() + k * i];
                for (j, c) in row.iter().enumerate() {
                    out[j + k * i] = c.clone();
                }
                out
            })
            .collect();
        BiPoly::new(rows)
    }

    /// Collapse `y` at an exact point, producing a polynomial in `x`.
    pub fn eval_y(&self, y: &C) -> UniPoly<C> {
        UniPoly::new(self.rows.iter().map(|row| UniPoly::new(row.clone()).eval(y)).collect())
    }

    /// Collapse `x` at an exact point, producing a polynomial in `y`.
    pub fn eval_x(&self, x: &C) -> UniPoly<C> {
        let mut out = vec![C::zero(); self.deg_y() + 1];
        let mut xp = C::one();
        for row in &self.rows {
            for (j, c) in row.iter().enumerate() {
                out[j] = out[j].clone() + c.clone() * xp.clone();
            }
            xp = xp * x.clone();
        }
        UniPoly::new(out)
    }

    /// Exact evaluation at a pair of points.
    pub fn eval(&self, x: &C, y: &C) -> C {
        self.eval_y(y).eval(x)
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for row in self.rows.iter().rev() {
            let mut ry = 0.0;
            for c in row.iter().rev() {
                ry = ry * y + c.to_f64();
            }
            acc = acc * x + ry;
        }
        acc
    }

    /// The non-constant part evaluated without cancellation; assumes the
    /// constant term sits at `(0, 0)`.
    pub fn eval_f64_tail(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for (i, j, c) in self.terms() {
            if i == 0 && j == 0 {
                continue;
            }
            acc += c.to_f64() * x.powi(i as i32) * y.powi(j as i32);
        }
        acc
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> BiPoly<D> {
        BiPoly::new(self.rows.iter().map(|r| r.iter().map(&f).collect()).collect())
    }

    /// Exact division, performed as long division in `y` over `ℤ[x]`-like
    /// coefficients; errors unless the division is exact.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        // View both as polynomials in y whose coefficients are UniPoly in x.
        let to_ycoeffs = |p: &BiPoly<C>| -> Vec<UniPoly<C>> {
            let dy = p.deg_y();
            (0..=dy)
                .map(|j| UniPoly::new(p.rows.iter().map(|row| row.get(j).cloned().unwrap_or_else(C::zero)).collect()))
                .collect()
        };
        let num = to_ycoeffs(self);
        let den = to_ycoeffs(rhs);
        let dn = num.len() - 1;
        let dd = den.len() - 1;
        if dn < dd {
            return Err(Error::InexactDivision("y-degree of dividend below divisor".into()));
        }
        let lead = den.last().unwrap();
        let mut rem = num;
        let mut quot = vec![UniPoly::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(lead)?;
            for (j, d) in den.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        if rem.iter().any(|p| !p.is_zero()) {
            return Err(Error::InexactDivision("nonzero remainder".into()));
        }
        // Reassemble rows from y-coefficients.
        let dx = quot.iter().map(|p| p.degree()).max().unwrap_or(0);
        let rows = (0..=dx)
            .map(|i| quot.iter().map(|p| p.coeff(i)).collect())
            .collect();
        Ok(BiPoly::new(rows))
    }
}

impl<C: Scalar> Add for BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: Self) -> Self {
        let nx = self.rows.len().max(rhs.rows.len());
        let mut rows = Vec::with_capacity(nx);
        for i in 0..nx {
            let a = self.rows.get(i).cloned().unwrap_or_default();
            let b = rhs.rows.get(i).cloned().unwrap_or_default();
            let ny = a.len().max(b.len());
            let mut row = Vec::with_capacity(ny);
            for j in 0..ny {
                let x = a.get(j).cloned().unwrap_or_else(C::zero);
                let y = b.get(j).cloned().unwrap_or_else(C::zero);
                row.push(x + y);
            }
            rows.push(row);
        }
        BiPoly::new(rows)
    }
}

impl<C: Scalar> Sub for BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Scalar> Neg for BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> Self {
        BiPoly::new(
            self.rows
                .into_iter()
                .map(|row| row.into_iter().map(|c| -c).collect())
                .collect(),
        )
    }
}

impl<C: Scalar> Mul for BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let dx = self.deg_x() + rhs.deg_x();
        let dy = self.deg_y() + rhs.deg_y();
        let mut rows = vec![vec![C::zero(); dy + 1]; dx + 1];
        for (i1, j1, a) in self.terms() {
            for (i2, j2, b) in rhs.terms() {
                let cell = &mut rows[i1 + i2][j1 + j2];
                *cell = cell.clone() + a.clone() * b.clone();
            }
        }
        BiPoly::new(rows)
    }
}

impl<C: Scalar> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_terms(self.terms().map(|(i, j, c)| (i, j, c)), true))
    }
}

impl<C: Scalar> fmt::Debug for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self)
    }
}

/// Render terms in the polynomial text format: `1+4x+x^2`,
/// `1+2*x*y+2*x*y^2+x^2*y^3`. Bivariate terms join factors with `*`.
fn format_terms<'a, C: Scalar + 'a>(
    terms: impl Iterator<Item = (usize, usize, &'a C)>,
    starred: bool,
) -> String {
    let mut out = String::new();
    let mut any = false;
    for (i, j, c) in terms {
        if c.is_zero() {
            continue;
        }
        let cs = c.to_string();
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        if any {
            out.push(if neg { '-' } else { '+' });
        } else if neg {
            out.push('-');
        }
        any = true;
        let mut factors: Vec<String> = Vec::new();
        if mag != "1" || (i == 0 && j == 0) {
            factors.push(mag);
        }
        for (var, e) in [("x", i), ("y", j)] {
            match e {
                0 => {}
                1 => factors.push(var.to_string()),
                _ => factors.push(format!("{var}^{e}")),
            }
        }
        out.push_str(&factors.join(if starred { "*" } else { "" }));
    }
    if !any {
        out.push('0');
    }
    out
}
