//! Seedable, splittable random streams and the grid-shifted stratified
//! sampler used by the Monte Carlo estimators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

/// Derives an independent random stream from `(seed, batch, estimator)`.
///
/// Streams with distinct `(batch, estimator)` pairs never overlap, so parallel
/// or reordered evaluation cannot change any sampled value.
pub fn substream(seed: u64, batch: u64, estimator: u32) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream((batch << 8) | u64::from(estimator & 0xff));
    rng
}

/// Grid-shifted stratified sampler on `[lo, hi]`.
///
/// A draw samples a single offset `u ~ U[0, 1/t)` and returns the shifted grid
/// `{(i-1)/t + u}` rescaled to the interval. Each point is marginally uniform
/// on its stratum, so empirical means of integrable functions are unbiased
/// estimates of the uniform average while the grid structure suppresses
/// variance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StratifiedSampler {
    /// Points per draw.
    pub t: usize,
    /// Base seed; sub-streams are derived per `(batch, estimator)`.
    pub seed: u64,
    pub lo: f64,
    pub hi: f64,
}

impl StratifiedSampler {
    pub fn new(t: usize, seed: u64, lo: f64, hi: f64) -> crate::Result<Self> {
        if t == 0 {
            return Err(crate::Error::InvalidParam {
                name: "t",
                reason: "need at least one sample per draw".into(),
            });
        }
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(crate::Error::InvalidParam {
                name: "interval",
                reason: format!("need finite lo < hi, got [{lo}, {hi}]"),
            });
        }
        Ok(Self { t, seed, lo, hi })
    }

    /// The deterministic core: grid points for a given offset `u ∈ [0, 1/t)`,
    /// affinely rescaled to `[lo, hi]`.
    pub fn points_from_offset(&self, u: f64) -> Vec<f64> {
        let t = self.t as f64;
        let width = self.hi - self.lo;
        (0..self.t)
            .map(|i| self.lo + width * (i as f64 / t + u))
            .collect()
    }

    /// Draws one stratified point set from the `(batch, estimator)` stream.
    pub fn draw(&self, batch: u64, estimator: u32) -> Vec<f64> {
        let mut rng = substream(self.seed, batch, estimator);
        let u: f64 = rng.gen::<f64>() / self.t as f64;
        self.points_from_offset(u)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}
