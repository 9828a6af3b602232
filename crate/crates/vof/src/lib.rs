//! Sparse variational Gaussian process regression with spectrally orthogonal
//! inducing features.
//!
//! The crate implements variational inference for GP regression in one input
//! dimension using interdomain inducing features built from orthogonal bases
//! in the spectral domain. Because the features are orthonormal under the
//! prior, the feature covariance `Kuu` is the identity and the usual `O(M^3)`
//! factorization cost of sparse variational inference disappears.
//!
//! Main pieces:
//!
//! * [`kernels`] — stationary covariance functions and their spectral
//!   densities, plus a quadrature reconstruction used as a correctness oracle.
//! * [`numerics`] — Hermite polynomials, Gauss and adaptive quadrature, and a
//!   seedable stratified sampler.
//! * [`features`] — the feature families: closed-form Hermite features for the
//!   squared-exponential kernel, trigonometric features for any stationary
//!   kernel (Monte Carlo estimated), kernel-operator eigenfunction features,
//!   and plain inducing points as a dense baseline.
//! * [`svgp`] — the variational model: posterior marginals, KL term, analytic
//!   and unbiased stochastic ELBO estimators, the closed-form optimal Gaussian
//!   variational distribution, and deterministic prediction.
//! * [`exact_gp`] — dense exact GP regression used as ground truth and as the
//!   generator for synthetic data.
//! * [`training`] — Adam / quasi-Newton optimizers over transformed parameter
//!   vectors with finite-difference or supplied gradients.

pub mod error;
pub mod exact_gp;
pub mod features;
pub mod kernels;
pub mod numerics;
pub mod svgp;
pub mod training;

pub use error::{Error, Result};
pub use kernels::{KernelFamily, KernelParams};
