//! Gauss-Jacobi quadrature via Golub-Welsch, plus the two-variable weighted
//! integrals with an |c1 - c2|^p coupling that the BC inner products reduce to
//! in cosine coordinates.

use crate::specialfun::gamma;
use nalgebra::{DMatrix, SymmetricEigen};

/// Nodes and weights of a Gaussian rule for int_{-1}^{1} (1-x)^a (1+x)^b f(x) dx.
#[derive(Clone, Debug)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Rescale the rule from [-1,1] to [lo, hi] for an unweighted integrand.
    pub fn mapped(&self, lo: f64, hi: f64) -> GaussRule {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        GaussRule {
            nodes: self.nodes.iter().map(|&x| mid + half * x).collect(),
            weights: self.weights.iter().map(|&w| w * half).collect(),
        }
    }
}

/// Gauss-Jacobi rule with n nodes, exact for polynomial f of degree <= 2n-1.
/// Requires a, b > -1.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> GaussRule {
    assert!(n >= 1 && a > -1.0 && b > -1.0);
    let mu0 = 2f64.powf(a + b + 1.0) * gamma(a + 1.0) * gamma(b + 1.0) / gamma(a + b + 2.0);
    // monic Jacobi recurrence coefficients
    let alpha = |k: usize| -> f64 {
        let k = k as f64;
        if k == 0.0 && a + b == 0.0 {
            // limit of the general formula
            (b - a) / (a + b + 2.0)
        } else {
            (b * b - a * a) / ((2.0 * k + a + b) * (2.0 * k + a + b + 2.0))
        }
    };
    let beta = |k: usize| -> f64 {
        let kf = k as f64;
        if k == 1 {
            4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0).powi(2) * (a + b + 3.0))
        } else {
            4.0 * kf * (kf + a) * (kf + b) * (kf + a + b)
                / ((2.0 * kf + a + b).powi(2) * (2.0 * kf + a + b + 1.0) * (2.0 * kf + a + b - 1.0))
        }
    };
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        m[(k, k)] = if k == 0 { (b - a) / (a + b + 2.0) } else { alpha(k) };
        if k + 1 < n {
            let off = beta(k + 1).sqrt();
            m[(k, k + 1)] = off;
            m[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let x = eig.eigenvalues[i];
            let v0 = eig.eigenvectors[(0, i)];
            (x, mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    GaussRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    }
}

pub fn gauss_legendre(n: usize) -> GaussRule {
    gauss_jacobi(n, 0.0, 0.0)
}

/// int_{-1}^{c1} (1-c2)^a (1+c2)^b (c1-c2) g(c2) dc2 by substitution
/// c2 = -1 + (1+c1) u: a Gauss-Jacobi cap at u = 0 handles u^b exactly and a
/// dyadically graded Gauss-Legendre mesh toward u = 1 resolves the boundary
/// layer of (2 - (1+c1)u)^a when c1 is close to 1.
fn inner_triangle_integral(
    a: f64,
    b: f64,
    c1: f64,
    rule_cap: &GaussRule,
    rule_piece: &GaussRule,
    g: &mut dyn FnMut(f64) -> f64,
) -> f64 {
    let s = 1.0 + c1;
    if s <= 0.0 {
        return 0.0;
    }
    let phi = |u: f64, g: &mut dyn FnMut(f64) -> f64| -> f64 {
        let c2 = -1.0 + s * u;
        (1.0 - u) * (2.0 - s * u).powf(a) * g(c2)
    };
    // cap [0, 1/2]: u^b weight via the (0,b) rule mapped from [-1,1]
    let h = 0.5f64;
    let mut acc = 0.0;
    let scale = (h / 2.0).powf(b + 1.0);
    for (&x, &w) in rule_cap.nodes.iter().zip(&rule_cap.weights) {
        let u = h * (1.0 + x) / 2.0;
        acc += scale * w * phi(u, g);
    }
    // dyadic pieces [1 - 2^-k, 1 - 2^-(k+1)], k = 1..K; the final sliver is
    // O(width^2) because of the (1-u) factor and is dropped
    let kmax = 40;
    for k in 1..=kmax {
        let lo = 1.0 - 2f64.powi(-k);
        let hi = 1.0 - 2f64.powi(-(k + 1));
        if hi <= lo {
            break;
        }
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for (&x, &w) in rule_piece.nodes.iter().zip(&rule_piece.weights) {
            let u = mid + half * x;
            acc += half * w * u.powf(b) * phi(u, g);
        }
    }
    acc * s.powf(b + 2.0)
}

/// Two-variable weighted integral
/// int int g(c1,c2) |c1-c2|^p (1-c1)^a (1+c1)^b (1-c2)^a (1+c2)^b dc1 dc2.
///
/// Even p: |c1-c2|^p is a polynomial, so a tensor Gauss-Jacobi rule is exact
/// up to the rule degree. Odd p: split over the triangle c2 < c1 using the
/// symmetrized integrand (the even part of the coupling folds into g).
pub fn jacobi_pair_integral(
    a: f64,
    b: f64,
    p: u32,
    n_nodes: usize,
    g: impl Fn(f64, f64) -> f64,
) -> f64 {
    if p % 2 == 0 {
        let rule = gauss_jacobi(n_nodes, a, b);
        let mut acc = 0.0;
        for (&x1, &w1) in rule.nodes.iter().zip(&rule.weights) {
            for (&x2, &w2) in rule.nodes.iter().zip(&rule.weights) {
                acc += w1 * w2 * (x1 - x2).powi(p as i32) * g(x1, x2);
            }
        }
        acc
    } else {
        let outer = gauss_jacobi(n_nodes.max(200), a, b);
        let rule_cap = gauss_jacobi(24, 0.0, b);
        let rule_piece = gauss_legendre(16);
        let even = (p - 1) as i32;
        let mut acc = 0.0;
        for (&c1, &w1) in outer.nodes.iter().zip(&outer.weights) {
            let mut gg = |c2: f64| {
                let sym = 0.5 * (g(c1, c2) + g(c2, c1));
                (c1 - c2).powi(even) * sym
            };
            acc += w1 * inner_triangle_integral(a, b, c1, &rule_cap, &rule_piece, &mut gg);
        }
        2.0 * acc
    }
}
