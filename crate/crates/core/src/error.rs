//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by exact arithmetic, numerics and product expansion.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Exact division was requested but the divisor does not divide the dividend.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// `log_series` needs a positive constant term (principal branch).
    #[error("logarithm branch violated: constant term {0} is not positive")]
    LogBranch(String),

    /// Dilogarithm evaluated on the branch cut [1, inf).
    #[error("dilogarithm branch cut: z = {0} lies on [1, inf)")]
    BranchCut(String),

    /// Root finder failed to reach the residual target.
    #[error("root finding did not converge: worst residual {residual:.3e} after {iterations} iterations")]
    RootsNotConverged { residual: f64, iterations: usize },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature did not converge: achieved error estimate {achieved:.3e}, requested {requested:.3e}")]
    QuadratureNotConverged { achieved: f64, requested: f64 },

    /// Bernoulli table consulted past its precomputed bound.
    #[error("Bernoulli index {0} exceeds table bound {1}")]
    BernoulliRange(usize, usize),

    /// A polynomial has a zero on (or numerically indistinguishable from) [0, 1].
    #[error("polynomial has a zero at {0} within 1e-8 of [0, 1]")]
    ZeroOnUnitInterval(String),

    /// An infinite-product factor fails to be 1 + (positive powers of q).
    #[error("divergent factor at index {index}: constant term of substituted factor is {constant}, expected 1")]
    DivergentFactor { index: usize, constant: String },

    /// Asymptotic theorem hypothesis gamma > 0 fails.
    #[error("theorem hypothesis violated: gamma = {gamma} is not positive")]
    HypothesisViolated { gamma: f64 },

    /// An exact identity asserted during construction does not hold.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    /// Polynomial text or spec file could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A precondition of an operation was not met.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
