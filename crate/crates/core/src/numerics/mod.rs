//! Torus quadrature for non-polynomial weights, truncated Macdonald weight
//! evaluation, Toeplitz determinants, and the Gauss-Jacobi rules used by the
//! BC inner products.

mod gauss;
mod toeplitz;
mod torus;

pub use gauss::{gauss_jacobi, gauss_legendre, jacobi_pair_integral, GaussRule};
pub use toeplitz::{toeplitz_det, toeplitz_det_from_coeffs, ToeplitzMatrix};
pub use torus::{torus_integrate, QuadratureResult, TorusGrid};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("quadrature budget exhausted before tolerance: best {value} +/- {error_estimate}")]
    BudgetExhausted { value: f64, error_estimate: f64 },
    #[error("Fourier coefficient quadrature failed: {0}")]
    SymbolQuadrature(String),
}

/// Evaluate the Macdonald torus weight prod_{i<j} |(z_i/z_j; q)_inf / (t z_i/z_j; q)_inf|^2
/// at a torus point given by angles, truncating both infinite products so the
/// relative truncation error is below `tol`.
pub fn macdonald_weight_eval(angles: &[f64], q: f64, t: f64, tol: f64) -> f64 {
    let n = angles.len();
    let mut acc = 1.0;
    for i in 0..n {
        for j in (i + 1)..n {
            acc *= macdonald_pair_weight(angles[i] - angles[j], q, t, tol);
        }
    }
    acc
}

/// One pair factor |(e^{id}; q)_inf / (t e^{id}; q)_inf|^2.
pub fn macdonald_pair_weight(delta: f64, q: f64, t: f64, tol: f64) -> f64 {
    let r_max = if q == 0.0 {
        1
    } else {
        (tol.ln() / q.abs().ln()).ceil() as i64 + 8
    };
    let (c, s) = (delta.cos(), delta.sin());
    let mut acc = 1.0;
    let mut qr = 1.0;
    for _ in 0..r_max {
        // |1 - a e^{id}|^2 = 1 - 2 a cos d + a^2 for real a
        let num = 1.0 - 2.0 * qr * c + qr * qr;
        let ta = t * qr;
        let den = 1.0 - 2.0 * ta * c + ta * ta;
        acc *= num / den;
        qr *= q;
        if qr.abs() < f64::MIN_POSITIVE {
            break;
        }
    }
    let _ = s;
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_trivial_one_variable() {
        assert_eq!(macdonald_weight_eval(&[0.7], 0.3, 0.5, 1e-12), 1.0);
    }

    #[test]
    fn weight_telescopes_at_t_equals_q() {
        // t = q: the pair factor collapses to |1 - e^{id}|^2
        let q = 0.37;
        for d in [0.3, 1.1, 2.9] {
            let w = macdonald_pair_weight(d, q, q, 1e-12);
            let direct = 2.0 - 2.0 * d.cos();
            assert!((w - direct).abs() < 1e-10, "{w} vs {direct}");
        }
        // n = 2, angles (0, pi): |1 - (-1)|^2 = 4
        let w = macdonald_weight_eval(&[0.0, std::f64::consts::PI], q, q, 1e-12);
        assert!((w - 4.0).abs() < 1e-10);
    }
}
