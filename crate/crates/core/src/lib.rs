//! Exact enumeration and numerical asymptotics of d-fold partition diamonds.
//!
//! The crate has three layers:
//!
//! - an exact layer: arbitrary-precision polynomials ([`poly`]), truncated
//!   power series ([`series`]), Eulerian and deformed Eulerian polynomial
//!   families ([`eulerian`]), generating-function expansion ([`qseries`]) and
//!   brute-force enumeration oracles ([`oracle`]);
//! - a numeric layer ([`specfun`]): Bernoulli numbers and polynomials, the
//!   complex dilogarithm, simultaneous polynomial root finding and adaptive
//!   Gauss–Legendre quadrature, all in double precision;
//! - an asymptotic layer ([`asymptotics`]): the growth constants of the
//!   counting sequences computed by two independent routes, Euler–Maclaurin
//!   expansions of the log-products, and exact-vs-asymptotic comparisons.
//!
//! The polynomial and series containers are generic over the coefficient
//! ring ([`ring::Scalar`]); the aliases below fix the two rings used in
//! practice.

pub mod asymptotics;
pub mod error;
pub mod eulerian;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod qseries;
pub mod ring;
pub mod series;
pub mod verify;
pub mod specfun;

pub use error::{Error, Result};
pub use ring::{Int, Rat};

/// Univariate polynomial over arbitrary-precision integers.
pub type IntPoly = poly::UniPoly<Int>;
/// Univariate polynomial over exact rationals.
pub type RatPoly = poly::UniPoly<Rat>;
/// Bivariate polynomial over arbitrary-precision integers.
pub type IntBiPoly = poly::BiPoly<Int>;
/// Bivariate polynomial over exact rationals.
pub type RatBiPoly = poly::BiPoly<Rat>;
/// Truncated q-series with integer coefficients.
pub type IntSeries = series::Series<Int>;
/// Truncated Taylor series with rational coefficients.
pub type RatSeries = series::Series<Rat>;
/// Double-precision complex value.
pub type ComplexVal = num_complex::Complex64;
