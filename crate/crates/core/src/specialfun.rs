//! Scalar special functions: gamma, q-gamma, Pochhammer symbols, q-brackets
//! and factorials, and the moment-limit constants.

use crate::algebra::{rat_int, Rat};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecialFunError {
    #[error("base q out of range: |q| must be < 1, got {0}")]
    BadBase(f64),
    #[error("pole encountered in {0}")]
    Pole(String),
}

/// log Gamma on (0, inf). Relative error of exp(ln_gamma) is ~1e-14 across the
/// range used by the moment formulas.
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1) in f64.
pub fn pochhammer_f64(a: f64, n: u32) -> f64 {
    (0..n).map(|k| a + k as f64).product()
}

/// Rising factorial over exact rationals.
pub fn pochhammer_rat(a: &Rat, n: u32) -> Rat {
    let mut acc = rat_int(1);
    for k in 0..n {
        acc *= a + rat_int(k as i64);
    }
    acc
}

/// Double factorial with the empty-product convention (-1)!! = 1, 0!! = 1.
pub fn double_factorial(n: i64) -> f64 {
    let mut acc = 1.0;
    let mut k = n;
    while k >= 1 {
        acc *= k as f64;
        k -= 2;
    }
    acc
}

/// Exact double factorial for small arguments, (-1)!! = 1.
pub fn double_factorial_rat(n: i64) -> Rat {
    let mut acc = rat_int(1);
    let mut k = n;
    while k >= 1 {
        acc *= rat_int(k);
        k -= 2;
    }
    acc
}

/// Truncated infinite q-Pochhammer (a;q)_inf = prod_{r>=0} (1 - a q^r).
///
/// The truncation index R = ceil(log tol / log |q|) + 8 guarantees the
/// neglected tail is below `tol` relatively.
pub fn q_pochhammer_inf(a: f64, q: f64, tol: f64) -> Result<f64, SpecialFunError> {
    if q.abs() >= 1.0 {
        return Err(SpecialFunError::BadBase(q));
    }
    if a == 0.0 {
        return Ok(1.0);
    }
    let r_max = if q == 0.0 {
        1
    } else {
        (tol.ln() / q.abs().ln()).ceil() as i64 + 8
    };
    let mut acc = 1.0;
    let mut aq = a;
    for _ in 0..r_max {
        acc *= 1.0 - aq;
        aq *= q;
        if aq.abs() < f64::MIN_POSITIVE {
            break;
        }
    }
    Ok(acc)
}

/// Finite q-Pochhammer (a;q)_n.
pub fn q_pochhammer(a: f64, q: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    let mut aq = a;
    for _ in 0..n {
        acc *= 1.0 - aq;
        aq *= q;
    }
    acc
}

/// q-bracket [x]_q = (1-q^x)/(1-q).
pub fn q_bracket(x: f64, q: f64) -> f64 {
    (1.0 - q.powf(x)) / (1.0 - q)
}

/// q-factorial [n]_q! = [n]_q [n-1]_q ... [1]_q.
pub fn q_factorial(n: u32, q: f64) -> f64 {
    (1..=n).map(|k| q_bracket(k as f64, q)).product()
}

/// Odd q-double factorial [2k-1]_q!! = [2k-1]_q [2k-3]_q ... [1]_q.
pub fn q_double_factorial_odd(k: u32, q: f64) -> f64 {
    (1..=k).map(|j| q_bracket((2 * j - 1) as f64, q)).product()
}

/// q-gamma function (1-q)^{1-x} (q;q)_inf / (q^x;q)_inf for q in (0,1).
pub fn q_gamma(x: f64, q: f64) -> Result<f64, SpecialFunError> {
    if !(0.0 < q && q < 1.0) {
        return Err(SpecialFunError::BadBase(q));
    }
    let tol = 1e-16;
    let qq = q_pochhammer_inf(q, q, tol)?;
    let qx = q_pochhammer_inf(q.powf(x), q, tol)?;
    if qx == 0.0 {
        return Err(SpecialFunError::Pole(format!("Gamma_q at x = {x}")));
    }
    Ok((1.0 - q).powf(1.0 - x) * qq / qx)
}

/// Evaluator for n -> Gamma(n+a) / (Gamma(n) n^a); tends to 1 as n -> inf.
pub fn gamma_ratio_asymptotic(a: f64) -> impl Fn(f64) -> f64 {
    move |n: f64| (ln_gamma(n + a) - ln_gamma(n) - a * n.ln()).exp()
}

/// BC parameter triple (k1, k2, k3); invariants k1+k2 > -1/2, k2 > -1/2, k3 >= 0.
#[derive(Clone, Debug, PartialEq)]
pub struct BcParameters {
    pub k1: Rat,
    pub k2: Rat,
    pub k3: Rat,
}

impl BcParameters {
    pub fn new(k1: Rat, k2: Rat, k3: Rat) -> Self {
        use crate::algebra::rat;
        let neg_half = rat(-1, 2);
        assert!(&k1 + &k2 > neg_half, "k1+k2 must exceed -1/2");
        assert!(k2 > neg_half, "k2 must exceed -1/2");
        assert!(k3 >= rat_int(0), "k3 must be nonnegative");
        BcParameters { k1, k2, k3 }
    }

    pub fn from_ints(k1: i64, k2: i64, k3: i64) -> Self {
        Self::new(rat_int(k1), rat_int(k2), rat_int(k3))
    }

    pub fn k1_f64(&self) -> f64 {
        crate::algebra::ToF64::to_f64(&self.k1)
    }
    pub fn k2_f64(&self) -> f64 {
        crate::algebra::ToF64::to_f64(&self.k2)
    }
    pub fn k3_f64(&self) -> f64 {
        crate::algebra::ToF64::to_f64(&self.k3)
    }

    /// True when all three parameters are nonnegative integers, which makes
    /// the weight a Laurent polynomial.
    pub fn is_integral(&self) -> bool {
        self.k1.is_integer() && self.k2.is_integer() && self.k3.is_integer()
    }
}

impl std::fmt::Display for BcParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.k1, self.k2, self.k3)
    }
}

/// F(m; k1,k2,k3) = prod_{j=0}^{m-1} sqrt(pi) / (2^{k1+2k2+j k3 - 1} Gamma(k1+k2+1/2+j k3)).
pub fn script_f(m: u32, p: &BcParameters) -> Result<f64, SpecialFunError> {
    let (k1, k2, k3) = (p.k1_f64(), p.k2_f64(), p.k3_f64());
    let mut acc = 1.0;
    for j in 0..m {
        let g_arg = k1 + k2 + 0.5 + j as f64 * k3;
        if g_arg <= 0.0 && g_arg.fract() == 0.0 {
            return Err(SpecialFunError::Pole(format!("Gamma({g_arg})")));
        }
        acc *= std::f64::consts::PI.sqrt()
            / (2f64.powf(k1 + 2.0 * k2 + j as f64 * k3 - 1.0) * gamma(g_arg));
    }
    Ok(acc)
}

/// The circular-ensemble moment-limit constant, both as the Gamma_t ratio
/// definition (t = q^{beta/2}) and, where displayed, as the closed
/// q-factorial form (beta = 1 or 2 for any k; beta = 4 for even k only).
///
/// Returns (definition, Some(closed)) or (definition, None).
pub fn script_f_beta_q(k: u32, beta: u32, q: f64) -> Result<(f64, Option<f64>), SpecialFunError> {
    assert!(matches!(beta, 1 | 2 | 4), "beta must be 1, 2 or 4");
    let t = q.powf(beta as f64 / 2.0);
    let mut def = 1.0;
    for i in 0..k {
        let a = 2.0 * (i as f64 + 1.0) / beta as f64;
        let b = 2.0 * ((k + i) as f64 + 1.0) / beta as f64;
        def *= q_gamma(a, t)? / q_gamma(b, t)?;
    }
    let closed = match beta {
        1 => {
            let sq = q.sqrt();
            let mut acc = 1.0;
            for j in 0..k {
                acc *= q_factorial(2 * j + 1, sq) / q_factorial(2 * k + 2 * j + 1, sq);
            }
            Some(acc)
        }
        2 => {
            let mut acc = 1.0;
            for j in 0..k {
                acc *= q_factorial(j, q) / q_factorial(j + k, q);
            }
            Some(acc)
        }
        4 => {
            if k % 2 != 0 {
                None
            } else {
                let kp = k / 2;
                let two_q = 1.0 + q;
                let mut acc = two_q.powi((2 * kp * kp) as i32);
                acc /= q_double_factorial_odd(kp, q);
                for j in 1..=(2 * kp).saturating_sub(1) {
                    acc *= q_factorial(j, q) / q_factorial(2 * j, q);
                }
                Some(acc)
            }
        }
        _ => unreachable!(),
    };
    Ok((def, closed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_pochhammer_at_zero() {
        assert_eq!(q_pochhammer_inf(0.0, 0.5, 1e-12).unwrap(), 1.0);
    }

    #[test]
    fn euler_product_value() {
        // (q;q)_inf at q = 0.5, digits frozen from a direct high-cutoff product
        let v = q_pochhammer_inf(0.5, 0.5, 1e-14).unwrap();
        assert!((v - 0.2887880950866024).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn q_binomial_limit() {
        // (q^a x; q)_inf / (x;q)_inf -> (1-x)^{-a} as q -> 1
        let (x, a, q): (f64, f64, f64) = (0.3, 2.0, 0.999);
        let lhs = q_pochhammer_inf(q.powf(a) * x, q, 1e-12).unwrap()
            / q_pochhammer_inf(x, q, 1e-12).unwrap();
        let rhs = (1.0 - x).powf(-a);
        assert!((lhs - rhs).abs() < 2e-3, "{lhs} vs {rhs}");
    }

    #[test]
    fn q_gamma_basics() {
        for q in [0.3, 0.7] {
            assert!((q_gamma(1.0, q).unwrap() - 1.0).abs() < 1e-12);
            // Gamma_q(3) = [2]_q! = 1 + q
            assert!((q_gamma(3.0, q).unwrap() - (1.0 + q)).abs() < 1e-12);
        }
    }

    #[test]
    fn q_gamma_functional_equation() {
        let q = 0.6;
        for x in [0.7, 1.3, 2.4] {
            let lhs = q_gamma(1.0 + x, q).unwrap();
            let rhs = q_bracket(x, q) * q_gamma(x, q).unwrap();
            assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
        }
    }

    #[test]
    fn q_legendre_duplication() {
        // Gamma_q(2x) Gamma_{q^2}(1/2) = (1+q)^{2x-1} Gamma_{q^2}(x) Gamma_{q^2}(x+1/2)
        let (x, q) = (1.3, 0.7);
        let q2 = q * q;
        let lhs = q_gamma(2.0 * x, q).unwrap() * q_gamma(0.5, q2).unwrap();
        let rhs = (1.0 + q).powf(2.0 * x - 1.0)
            * q_gamma(x, q2).unwrap()
            * q_gamma(x + 0.5, q2).unwrap();
        assert!((lhs - rhs).abs() < 1e-12 * lhs.abs());
    }

    #[test]
    fn q_gamma_tends_to_gamma() {
        for x in [1.5, 2.5, 4.0] {
            let mut prev_gap = f64::INFINITY;
            for k in 1..=4 {
                let q = 1.0 - 10f64.powi(-k);
                let gap = (q_gamma(x, q).unwrap() - gamma(x)).abs();
                assert!(gap < prev_gap, "x={x} k={k}: {gap} !< {prev_gap}");
                prev_gap = gap;
            }
        }
    }

    #[test]
    fn q_factorial_is_q_gamma_at_integers() {
        let q = 0.45;
        for n in 0..=20u32 {
            let lhs = q_factorial(n, q);
            let rhs = q_gamma(n as f64 + 1.0, q).unwrap();
            assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0), "n={n}");
        }
    }

    #[test]
    fn gamma_ratio_examples() {
        let f0 = gamma_ratio_asymptotic(0.0);
        assert_eq!(f0(10.0), 1.0);
        let f1 = gamma_ratio_asymptotic(1.0);
        assert!((f1(7.0) - 1.0).abs() < 1e-14);
        let fh = gamma_ratio_asymptotic(0.5);
        assert!((fh(1e6) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn classical_duplication() {
        // Gamma(2a) = 2^{2a-1} pi^{-1/2} Gamma(a) Gamma(a + 1/2)
        for a in [0.37, 1.21, 3.4, 5.75] {
            let lhs = gamma(2.0 * a);
            let rhs =
                2f64.powf(2.0 * a - 1.0) / std::f64::consts::PI.sqrt() * gamma(a) * gamma(a + 0.5);
            assert!((lhs - rhs).abs() < 1e-12 * lhs.abs());
        }
    }

    #[test]
    fn script_f_values() {
        use crate::algebra::rat;
        let b = BcParameters::from_ints(1, 0, 1);
        assert_eq!(script_f(0, &b).unwrap(), 1.0);
        assert!((script_f(1, &b).unwrap() - 2.0).abs() < 1e-14);
        let c = BcParameters::from_ints(0, 1, 1);
        assert!((script_f(1, &c).unwrap() - 1.0).abs() < 1e-14);
        // fractional parameters are admissible
        let _frac = BcParameters::new(rat_int(0), rat(1, 2), rat(1, 2));
    }

    #[test]
    fn script_f_beta_q_pairs_agree() {
        for q in [0.3, 0.7] {
            for k in 1..=3u32 {
                for beta in [1u32, 2, 4] {
                    let arg = if beta == 4 { 2 * k } else { k };
                    let (def, closed) = script_f_beta_q(arg, beta, q).unwrap();
                    let closed = closed.expect("closed form exists for this argument");
                    assert!(
                        (def - closed).abs() < 1e-12 * def.abs().max(1.0),
                        "beta={beta} k={k} q={q}: {def} vs {closed}"
                    );
                }
            }
        }
    }

    #[test]
    fn beta2_k1_is_one() {
        let (def, closed) = script_f_beta_q(1, 2, 0.5).unwrap();
        assert!((def - 1.0).abs() < 1e-12);
        assert!((closed.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), 1.0);
        assert_eq!(double_factorial(0), 1.0);
        assert_eq!(double_factorial(5), 15.0);
        assert_eq!(double_factorial_rat(7), rat_int(105));
    }
}
