//! Hermite polynomials in the physicists' convention and stabilized scaled
//! variants.
//!
//! The convention is `H_0 = 1`, `H_1(x) = 2x`,
//! `H_{m+1}(x) = 2x H_m(x) - 2m H_{m-1}(x)`, which carries the orthogonality
//! constant `sqrt(pi) 2^n n!`. Feature evaluation never uses the raw
//! polynomials directly: it runs a joint recurrence on
//! `gamma^m H_m(x) / sqrt(2^m m!)` so that geometric damping factors and the
//! factorial normalization never materialize separately and nothing overflows
//! for the degrees used in practice.

use crate::error::{Error, Result};
use crate::numerics::adaptive_integrate;

/// Overflow guard for the raw-polynomial entry point.
pub const MAX_HERMITE_DEGREE: usize = 200;

/// Largest degree accepted by the quadrature orthogonality check; beyond this
/// the integrand becomes too ill-conditioned for a meaningful test.
const MAX_ORTHO_DEGREE: usize = 30;

/// Evaluates the physicists' Hermite polynomial `H_m(x)`.
pub fn hermite_polynomial(m: usize, x: f64) -> Result<f64> {
    if m > MAX_HERMITE_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: m,
            max: MAX_HERMITE_DEGREE,
        });
    }
    Ok(hermite_sequence(m + 1, x)?.pop().expect("nonempty"))
}

/// Evaluates `H_0(x) .. H_{count-1}(x)` in one recurrence pass.
pub fn hermite_sequence(count: usize, x: f64) -> Result<Vec<f64>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if count - 1 > MAX_HERMITE_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: count - 1,
            max: MAX_HERMITE_DEGREE,
        });
    }
    let mut out = Vec::with_capacity(count);
    out.push(1.0);
    if count > 1 {
        out.push(2.0 * x);
    }
    for m in 1..count.saturating_sub(1) {
        let next = 2.0 * x * out[m] - 2.0 * (m as f64) * out[m - 1];
        out.push(next);
    }
    Ok(out)
}

/// Joint recurrence on `c_m = seed * gamma^m H_m(x) / sqrt(2^m m!)`.
///
/// With `seed = exp(-x^2/2)` and `gamma = 1` this yields the orthonormal
/// Hermite functions (up to `pi^(-1/4)`); other `gamma` values absorb the
/// geometric factors appearing in the spectral feature closed forms.
pub fn scaled_hermite_sequence(count: usize, x: f64, gamma: f64, seed: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(seed);
    if count > 1 {
        out.push(gamma * x * std::f64::consts::SQRT_2 * seed);
    }
    for m in 1..count.saturating_sub(1) {
        let m_f = m as f64;
        let next = gamma * x * (2.0 / (m_f + 1.0)).sqrt() * out[m]
            - gamma * gamma * (m_f / (m_f + 1.0)).sqrt() * out[m - 1];
        out.push(next);
    }
    out
}

/// `H_m(x) exp(-x^2/2) / sqrt(2^m m!)` for `m = 0 .. count-1`, evaluated
/// without forming the unbounded factors.
pub fn normalized_hermite_function(count: usize, x: f64) -> Vec<f64> {
    scaled_hermite_sequence(count, x, 1.0, (-0.5 * x * x).exp())
}

/// Numerically evaluates the orthogonality integral
/// `\int H_m(r x) H_n(r x) exp(-r^2 x^2) dx`,
/// which equals `sqrt(pi) 2^n n! / r` when `m == n` and zero otherwise.
///
/// `tol` is relative to the scale `sqrt(pi) sqrt(2^m m! 2^n n!) / r`.
pub fn hermite_orthogonality_check(m: usize, n: usize, r: f64, tol: f64) -> Result<f64> {
    if m > MAX_ORTHO_DEGREE || n > MAX_ORTHO_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: m.max(n),
            max: MAX_ORTHO_DEGREE,
        });
    }
    if !(r > 0.0) {
        return Err(Error::InvalidParam {
            name: "r",
            reason: format!("must be positive, got {r}"),
        });
    }
    let count = m.max(n) + 1;
    // Scale anchor: geometric mean of the two diagonal constants.
    let mut log_scale = 0.5 * std::f64::consts::PI.ln() - r.ln();
    for k in 1..=m {
        log_scale += 0.5 * (2.0 * k as f64).ln();
    }
    for k in 1..=n {
        log_scale += 0.5 * (2.0 * k as f64).ln();
    }
    let scale = log_scale.exp();

    let half = ((2.0 * count as f64 + 1.0).sqrt() + 8.0) / r;
    let result = adaptive_integrate(
        |x| {
            let h = hermite_sequence(count, r * x).expect("degree within guard");
            h[m] * h[n] * (-r * r * x * x).exp()
        },
        -half,
        half,
        tol * scale,
    )?;
    Ok(result.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn degree_zero_is_one_everywhere() {
        assert_eq!(hermite_polynomial(0, 7.3).unwrap(), 1.0);
    }

    #[test]
    fn degree_one_is_twice_x() {
        assert_eq!(hermite_polynomial(1, 2.0).unwrap(), 4.0);
    }

    #[test]
    fn degree_two_from_recurrence() {
        // H_2(x) = 4x^2 - 2
        assert_eq!(hermite_polynomial(2, 1.0).unwrap(), 2.0);
    }

    #[test]
    fn rejects_degrees_above_guard() {
        assert!(matches!(
            hermite_polynomial(201, 0.0),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn recurrence_identity_holds() {
        // H_{m+1} - 2x H_m + 2m H_{m-1} = 0, relative 1e-10, m <= 50.
        for &x in &[-5.0, -1.3, 0.2, 2.0, 5.0] {
            let h = hermite_sequence(52, x).unwrap();
            for m in 1..=50 {
                let lhs = h[m + 1] - 2.0 * x * h[m] + 2.0 * m as f64 * h[m - 1];
                let scale = h[m + 1].abs().max(h[m].abs()).max(1.0);
                assert!(
                    lhs.abs() <= 1e-10 * scale,
                    "m={m}, x={x}: residual {lhs:.3e} vs scale {scale:.3e}"
                );
            }
        }
    }

    #[test]
    fn generating_function_partial_sum() {
        // sum_{n <= 40} t^n / n! H_n(x) = exp(2xt - t^2) within 1e-8
        // for |t| <= 0.5, |x| <= 2.
        for &t in &[-0.5, -0.2, 0.1, 0.5] {
            for &x in &[-2.0, -0.7, 0.0, 1.3, 2.0] {
                let h = hermite_sequence(41, x).unwrap();
                let mut sum = 0.0;
                let mut coef = 1.0; // t^n / n!
                for (n, hn) in h.iter().enumerate() {
                    sum += coef * hn;
                    coef *= t / (n as f64 + 1.0);
                }
                let target = (2.0 * x * t - t * t).exp();
                assert_abs_diff_eq!(sum, target, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn scaled_sequence_matches_raw_combination() {
        let x = 1.7;
        let gamma = 0.6;
        let scaled = scaled_hermite_sequence(12, x, gamma, 1.0);
        let raw = hermite_sequence(12, x).unwrap();
        let mut norm = 1.0; // sqrt(2^m m!)
        let mut gam = 1.0;
        for m in 0..12 {
            assert_abs_diff_eq!(scaled[m], gam * raw[m] / norm, epsilon = 1e-12 * norm);
            norm *= (2.0 * (m as f64 + 1.0)).sqrt();
            gam *= gamma;
        }
    }

    #[test]
    fn normalized_function_is_bounded_at_high_degree() {
        let h = normalized_hermite_function(180, 9.0);
        assert!(h.iter().all(|v| v.is_finite() && v.abs() < 10.0));
    }

    #[test]
    fn orthogonality_diagonal_degree_one() {
        let val = hermite_orthogonality_check(1, 1, 1.0, 1e-10).unwrap();
        assert_abs_diff_eq!(val, 2.0 * PI.sqrt(), epsilon = 1e-8);
    }

    #[test]
    fn orthogonality_off_diagonal_vanishes() {
        for &r in &[0.7, 1.0, 2.3] {
            let val = hermite_orthogonality_check(0, 1, r, 1e-10).unwrap();
            assert_abs_diff_eq!(val, 0.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn orthogonality_diagonal_scaled_argument() {
        let val = hermite_orthogonality_check(0, 0, 2.0, 1e-10).unwrap();
        assert_abs_diff_eq!(val, PI.sqrt() / 2.0, epsilon = 1e-9);
    }
}
