//! High-precision special functions and numerics: exact Bernoulli data, the
//! complex dilogarithm, simultaneous root finding and adaptive quadrature.

pub mod bernoulli;
pub mod dilog;
pub mod quad;
pub mod roots;

pub use bernoulli::{bernoulli, bernoulli_poly, bernoulli_poly_coeffs};
pub use dilog::dilog;
pub use quad::{integrate, quad_smooth, Quadrature};
pub use roots::{poly_roots, roots_f64};
