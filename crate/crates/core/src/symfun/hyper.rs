//! Multivariate hypergeometric series attached to Macdonald and Jack
//! polynomials, summed shell-by-shell over partition weight with a tail-norm
//! stopping rule and termination detection for q^{-k} / negative-integer
//! numerator parameters.

use super::engine::{EngineParams, OrthogonalEngine};
use super::products::{c_products_generic, gen_factorial, jack_bracket, jack_c_prime, pow};
use super::eval_element;
use crate::algebra::{Field, FromRat, ToF64};
use crate::partitions::{partitions_of, Partition};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HyperError {
    #[error("series did not converge within the weight cap {cap}; partial sum {partial}")]
    NonConvergence { cap: u32, partial: f64 },
    #[error("denominator parameter produced a zero factor at lambda = {0}")]
    PoleInDenominator(String),
}

/// Default weight cap for the series.
pub const DEFAULT_CAP: u32 = 20;
/// Default relative tail tolerance of the stopping rule.
pub const DEFAULT_TOL: f64 = 1e-14;

fn detect_q_power_termination<F: Field + ToF64>(a: &F, q: &F, cap: u32) -> Option<u32> {
    // smallest k <= cap with a * q^k = 1, i.e. a = q^{-k}
    let one = F::one();
    let mut aq = a.clone();
    for k in 0..=cap {
        if aq == one || (aq.to_f64() - 1.0).abs() < 1e-12 {
            return Some(k);
        }
        aq = aq.mul(q);
    }
    None
}

fn detect_negative_integer<F: Field + FromRat + ToF64>(a: &F, cap: u32) -> Option<u32> {
    for k in 0..=cap {
        let cand = F::from_int(-(k as i64));
        if a == &cand || (a.to_f64() + k as f64).abs() < 1e-12 {
            return Some(k);
        }
    }
    None
}

/// Generic shell-summed series: `term` maps each partition to its term value.
fn sum_shells<F: Field + ToF64>(
    n_vars: usize,
    row_cap: Option<u32>,
    cap: u32,
    rel_tol: f64,
    mut term: impl FnMut(&Partition) -> Result<F, HyperError>,
) -> Result<F, HyperError> {
    let mut acc = F::zero();
    let mut small_shells = 0;
    for d in 0..=cap {
        if let Some(rc) = row_cap {
            if d > rc.saturating_mul(n_vars as u32) {
                return Ok(acc);
            }
        }
        let mut shell = F::zero();
        let mut any = false;
        for lam in partitions_of(d) {
            if lam.length() > n_vars {
                continue;
            }
            if let Some(rc) = row_cap {
                if lam.part(1) > rc {
                    continue;
                }
            }
            any = true;
            shell = shell.add(&term(&lam)?);
        }
        acc = acc.add(&shell);
        if row_cap.is_none() {
            let s = shell.to_f64().abs();
            let a = acc.to_f64().abs().max(1.0);
            if d > 0 && (!any || s <= rel_tol * a) {
                small_shells += 1;
                if small_shells >= 2 {
                    return Ok(acc);
                }
            } else {
                small_shells = 0;
            }
        }
    }
    if row_cap.is_some() {
        Ok(acc)
    } else {
        Err(HyperError::NonConvergence {
            cap,
            partial: acc.to_f64(),
        })
    }
}

/// 2Phi1 basic hypergeometric series attached to Macdonald polynomials:
/// sum over lambda of (a)_lambda (b)_lambda / (c)_lambda *
/// P_lambda(points; q, t) / c'_lambda(q,t), with the generalized factorials
/// (x)_lambda = prod_s (t^{l'} - q^{a'} x).
pub fn hyper_2phi1_qt<F: Field + FromRat + ToF64>(
    a: &F,
    b: &F,
    c: &F,
    points: &[F],
    q: &F,
    t: &F,
    cap: u32,
    rel_tol: f64,
) -> Result<F, HyperError> {
    let engine = OrthogonalEngine::new(EngineParams::Qt {
        q: q.clone(),
        t: t.clone(),
    });
    let row_cap = match (
        detect_q_power_termination(a, q, cap),
        detect_q_power_termination(b, q, cap),
    ) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) => Some(x),
        (None, Some(y)) => Some(y),
        (None, None) => None,
    };
    sum_shells(points.len(), row_cap, cap, rel_tol, |lam| {
        let fa = gen_factorial(lam, a, q, t);
        let fb = gen_factorial(lam, b, q, t);
        let fc = gen_factorial(lam, c, q, t);
        if fc.is_zero() {
            return Err(HyperError::PoleInDenominator(lam.to_string()));
        }
        let (_, cp) = c_products_generic(lam, q, t);
        let p_val = eval_element(&engine.polynomial(lam).m, points);
        Ok(fa.mul(&fb).div(&fc).mul(&p_val).div(&cp))
    })
}

/// 2F1 hypergeometric series attached to Jack polynomials:
/// sum over lambda of [a]_lambda [b]_lambda / [c]_lambda *
/// alpha^{|lambda|} P_lambda(points; alpha) / c'_lambda(alpha).
pub fn hyper_2f1_alpha<F: Field + FromRat + ToF64>(
    a: &F,
    b: &F,
    c: &F,
    points: &[F],
    alpha: &F,
    cap: u32,
    rel_tol: f64,
) -> Result<F, HyperError> {
    let engine = OrthogonalEngine::new(EngineParams::Jack {
        alpha: alpha.clone(),
    });
    let row_cap = match (detect_negative_integer(a, cap), detect_negative_integer(b, cap)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) => Some(x),
        (None, Some(y)) => Some(y),
        (None, None) => None,
    };
    sum_shells(points.len(), row_cap, cap, rel_tol, |lam| {
        let fa = jack_bracket(lam, a, alpha);
        let fb = jack_bracket(lam, b, alpha);
        let fc = jack_bracket(lam, c, alpha);
        if fc.is_zero() {
            return Err(HyperError::PoleInDenominator(lam.to_string()));
        }
        let cp = jack_c_prime(lam, alpha);
        let p_val = eval_element(&engine.polynomial(lam).m, points);
        Ok(fa
            .mul(&fb)
            .div(&fc)
            .mul(&pow(alpha, lam.weight()))
            .mul(&p_val)
            .div(&cp))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int, Rat};

    #[test]
    fn empty_points_give_one() {
        let v = hyper_2phi1_qt::<f64>(
            &0.1, &0.2, &0.7, &[0.0, 0.0], &0.3, &0.5, 10, 1e-14,
        )
        .unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        let w = hyper_2f1_alpha::<f64>(&-1.0, &-1.0, &2.0, &[0.0], &1.0, 10, 1e-14).unwrap();
        assert!((w - 1.0).abs() < 1e-15);
    }

    #[test]
    fn single_variable_matches_classical_q_series() {
        // n = 1: P_lambda one-row, terminating a = q^{-1}; compare against the
        // classical scalar 2phi1 sum with (x;q)_k Pochhammers
        let (q, t, z) = (0.4f64, 0.4f64, 0.2f64);
        let a = q.powi(-1);
        let b = q.powi(-1);
        let c = 0.3f64;
        let got = hyper_2phi1_qt::<f64>(&a, &b, &c, &[z], &q, &t, 20, 1e-14).unwrap();
        // classical terminating sum: for one variable and t = q,
        // term_k = [(a)_lambda(b)_lambda/(c)_lambda] * z^k / c'_(k)
        // with (x)_(k) = prod_{j=0}^{k-1} (1 - q^j x) and c'_(k) = (q;q)_k
        let poch = |x: f64, k: u32| -> f64 { (0..k).map(|j| 1.0 - q.powi(j as i32) * x).product() };
        let mut expect = 0.0;
        for k in 0..=1u32 {
            // a = q^{-1} kills k >= 2
            expect += poch(a, k) * poch(b, k) / poch(c, k) * z.powi(k as i32) / poch(q, k);
        }
        assert!((got - expect).abs() < 1e-12, "{got} vs {expect}");
    }

    #[test]
    fn cue_second_moment_via_jack_2f1() {
        // <|det(I + eta M)|^2> for the 2x2 unitary group at |eta|^2 = 1/4
        // equals 1 + a + a^2 with a = 1/4 (Toeplitz determinant of the symbol)
        let a = rat_int(-1);
        let c = rat_int(2);
        let alpha = rat_int(1);
        let x = rat(1, 4);
        let v = hyper_2f1_alpha::<Rat>(
            &a,
            &a,
            &c,
            &[x.clone(), x.clone()],
            &alpha,
            20,
            1e-14,
        )
        .unwrap();
        let expect = rat_int(1) + &x + &x * &x;
        assert_eq!(v, expect);
    }

    #[test]
    fn nonconvergence_is_flagged() {
        // |points| ~ 1.5 diverges
        let r = hyper_2phi1_qt::<f64>(&0.5, &0.5, &0.3, &[1.5], &0.4, &0.5, 8, 1e-14);
        assert!(r.is_err());
    }
}
