//! Shared numerical substrate: special functions, deterministic quadrature,
//! and the seedable stratified sampler.
//!
//! Everything here is a pure function of its arguments; samplers are value
//! types whose sub-streams are derived from `(seed, batch, estimator)` so that
//! results never depend on evaluation order or thread count.

mod hermite;
mod quadrature;
mod sampler;

pub use hermite::{
    hermite_orthogonality_check, hermite_polynomial, hermite_sequence,
    normalized_hermite_function, scaled_hermite_sequence, MAX_HERMITE_DEGREE,
};
pub use quadrature::{
    adaptive_integrate, adaptive_integrate_with, gauss_hermite_nodes, gauss_legendre_nodes,
    gauss_legendre_on, integrate_real_line, QuadResult, DEFAULT_MAX_EVALS,
};
pub use sampler::{substream, StratifiedSampler};

use serde::{Deserialize, Serialize};

/// Quadrature scheme selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// Fixed-order Gauss-Hermite rule (weight `exp(-x^2)` on the real line).
    GaussHermite,
    /// Fixed-order Gauss-Legendre rule on a bounded interval.
    GaussLegendre,
    /// Adaptive trapezoid with Richardson extrapolation and bisection.
    AdaptiveTrapezoid,
}

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Domain {
    RealLine,
    Interval(f64, f64),
}

/// Declarative description of a quadrature request.
///
/// `order` is the node count for Gauss rules; for the adaptive scheme it is
/// reinterpreted as a subdivision budget multiplier and `tol` drives the
/// refinement instead.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    pub order: usize,
    pub domain: Domain,
    pub tol: f64,
}

impl QuadratureSpec {
    pub fn adaptive(tol: f64) -> Self {
        Self {
            scheme: Scheme::AdaptiveTrapezoid,
            order: 1,
            domain: Domain::RealLine,
            tol,
        }
    }

    pub fn gauss_hermite(order: usize) -> Self {
        Self {
            scheme: Scheme::GaussHermite,
            order,
            domain: Domain::RealLine,
            tol: 1e-10,
        }
    }

    pub fn gauss_legendre(order: usize) -> Self {
        Self {
            scheme: Scheme::GaussLegendre,
            order,
            domain: Domain::RealLine,
            tol: 1e-10,
        }
    }

    pub fn on_interval(mut self, lo: f64, hi: f64) -> Self {
        self.domain = Domain::Interval(lo, hi);
        self
    }
}
