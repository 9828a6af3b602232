//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction, numerical routines, and inference.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor argument violated its documented precondition.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    /// An adaptive quadrature failed to certify the requested tolerance.
    /// `value` carries the best available estimate so callers can still
    /// inspect how far off the computation ended up.
    #[error("quadrature tolerance not reached: requested {requested:.3e}, achieved {achieved:.3e}")]
    ToleranceNotReached {
        requested: f64,
        achieved: f64,
        value: f64,
    },

    /// Raw Hermite polynomial degree above the overflow guard.
    #[error("Hermite degree {degree} exceeds supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    /// Gauss rule order outside the supported range.
    #[error("quadrature order {order} outside [{min}, {max}]")]
    OrderOutOfRange { order: usize, min: usize, max: usize },

    /// A matrix expected to be positive definite was not, even after jitter.
    #[error("Cholesky factorization failed: {context}")]
    CholeskyFailed { context: String },

    /// The feature family has no closed-form cross-covariance; the Monte
    /// Carlo or quadrature path must be used instead.
    #[error("feature family `{family}` has no closed-form Kuf; use the Monte Carlo or quadrature path")]
    FeatureRequiresMc { family: &'static str },

    /// A feature-family well-definedness constraint was violated.
    #[error("feature constraint violated: {0}")]
    ConstraintViolated(String),

    /// The optimizer observed a non-finite objective value.
    #[error("objective became non-finite at iteration {iter}; parameters: {params}")]
    NonFiniteObjective { iter: usize, params: String },
}

pub type Result<T> = std::result::Result<T, Error>;
