//! BC dual Cauchy identity:
//! prod_{i,j} (x_i + 1/x_i - y_j - 1/y_j) =
//! sum over lambda in (m^n) of (-1)^{|tilde(lambda)|}
//! P_lambda(x; k) P_{tilde(lambda)}(y; dual(k)),
//! checked exactly as Laurent polynomials or numerically at torus points.

use super::engine::HoEngine;
use super::monomial::bc_orbit;
use super::{tilde_params_with, BcError, BcParameters, DualMap};
use crate::algebra::{rat_int, LaurentPolynomial, Rat, Ring, VarSet};
use crate::partitions::{partitions_in_rectangle, tilde_complement, Partition};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};

#[derive(Clone, Copy, Debug)]
pub enum MimachiMode {
    Exact,
    Numeric { tol: f64, points: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct MimachiReport {
    pub n: usize,
    pub m: usize,
    pub params: BcParameters,
    pub dual_map: DualMap,
    pub pass: bool,
    pub max_residual: f64,
    pub method: &'static str,
}

fn bc_element_in_block<F: Ring>(
    elem: &super::monomial::BcElement<F>,
    vars: &VarSet,
    offset: usize,
    width: usize,
) -> LaurentPolynomial<F> {
    let mut out = LaurentPolynomial::zero(vars);
    for (mu, c) in elem {
        for v in bc_orbit(mu, width) {
            let mut exps = vec![0i32; vars.len()];
            exps[offset..offset + width].copy_from_slice(&v);
            out = out.add(&LaurentPolynomial::monomial(vars, exps, c.clone()));
        }
    }
    out
}

/// Check the identity for given sizes, parameters and dual-map convention.
pub fn mimachi_check(
    n: usize,
    m: usize,
    params: &BcParameters,
    map: DualMap,
    mode: MimachiMode,
) -> Result<MimachiReport, BcError> {
    let dual = tilde_params_with(params, map)?;
    match mode {
        MimachiMode::Exact => {
            let names: Vec<String> = (1..=n)
                .map(|i| format!("x{i}"))
                .chain((1..=m).map(|j| format!("y{j}")))
                .collect();
            let vars = VarSet::new(names);
            let one = LaurentPolynomial::<Rat>::one(&vars);
            let mut lhs = one.clone();
            for i in 0..n {
                for j in 0..m {
                    let term = |idx: usize, p: i32, sign: i64| {
                        let mut e = vec![0i32; n + m];
                        e[idx] = p;
                        LaurentPolynomial::monomial(&vars, e, rat_int(sign))
                    };
                    let f = term(i, 1, 1)
                        .add(&term(i, -1, 1))
                        .add(&term(n + j, 1, -1))
                        .add(&term(n + j, -1, -1));
                    lhs = lhs.mul(&f);
                }
            }
            let eng_x = HoEngine::exact(params.clone(), n)?;
            let eng_y = HoEngine::exact(dual.clone(), m)?;
            let mut rhs = LaurentPolynomial::<Rat>::zero(&vars);
            for lam in partitions_in_rectangle(m as u32, n) {
                let tl = tilde_complement(&lam, m as u32, n).expect("in rectangle");
                let px = eng_x.polynomial(&lam)?;
                let py = eng_y.polynomial(&tl)?;
                let lx = bc_element_in_block(px.coeffs_exact.as_ref().unwrap(), &vars, 0, n);
                let ly = bc_element_in_block(py.coeffs_exact.as_ref().unwrap(), &vars, n, m);
                let sign = if tl.weight() % 2 == 0 { 1 } else { -1 };
                rhs = rhs.add(&lx.mul(&ly).scale(&rat_int(sign)));
            }
            let diff = lhs.sub(&rhs);
            let max_residual = diff
                .terms()
                .map(|(_, c)| crate::algebra::ToF64::to_f64(c).abs())
                .fold(0.0f64, f64::max);
            Ok(MimachiReport {
                n,
                m,
                params: params.clone(),
                dual_map: map,
                pass: diff.is_zero(),
                max_residual,
                method: "exact-ct",
            })
        }
        MimachiMode::Numeric { tol, points, seed } => {
            let eng_x = HoEngine::auto(params.clone(), n)?;
            let eng_y = HoEngine::auto(dual.clone(), m)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut max_residual = 0.0f64;
            for _ in 0..points {
                let xs: Vec<Complex64> = (0..n)
                    .map(|_| Complex64::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU))
                    .collect();
                let ys: Vec<Complex64> = (0..m)
                    .map(|_| Complex64::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU))
                    .collect();
                let mut lhs = Complex64::new(1.0, 0.0);
                for xi in &xs {
                    for yj in &ys {
                        lhs *= xi + 1.0 / xi - yj - 1.0 / yj;
                    }
                }
                let mut rhs = Complex64::new(0.0, 0.0);
                for lam in partitions_in_rectangle(m as u32, n) {
                    let tl = tilde_complement(&lam, m as u32, n).expect("in rectangle");
                    let px = eng_x.polynomial(&lam)?;
                    let py = eng_y.polynomial(&tl)?;
                    let sign = if tl.weight() % 2 == 0 { 1.0 } else { -1.0 };
                    rhs += px.eval_complex(&xs) * py.eval_complex(&ys) * sign;
                }
                max_residual = max_residual.max((lhs - rhs).norm());
            }
            Ok(MimachiReport {
                n,
                m,
                params: params.clone(),
                dual_map: map,
                pass: max_residual <= tol,
                max_residual,
                method: "numeric",
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn integer_triples() -> Vec<BcParameters> {
        vec![
            BcParameters::from_ints(1, 0, 1),
            BcParameters::from_ints(0, 1, 1),
            BcParameters::from_ints(0, 0, 1),
        ]
    }

    #[test]
    fn trivial_sizes() {
        let p = BcParameters::from_ints(1, 0, 1);
        let r = mimachi_check(0, 0, &p, DualMap::Printed, MimachiMode::Exact).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn one_by_one_exact() {
        for p in integer_triples() {
            let r = mimachi_check(1, 1, &p, DualMap::Printed, MimachiMode::Exact).unwrap();
            assert!(r.pass, "params {p}");
        }
    }

    #[test]
    fn mixed_shapes_exact() {
        for p in integer_triples() {
            for (n, m) in [(2, 1), (1, 2), (2, 2)] {
                let r = mimachi_check(n, m, &p, DualMap::Printed, MimachiMode::Exact).unwrap();
                assert!(r.pass, "params {p} n={n} m={m}");
            }
        }
    }

    #[test]
    fn numeric_fractional_one_one() {
        // (0,1/2,1/2) at (n,m) = (1,1): both dual maps pass (P_(1) is
        // insensitive to the second dual parameter there)
        let p = BcParameters::new(rat(0, 1), rat(1, 2), rat(1, 2));
        let r = mimachi_check(
            1,
            1,
            &p,
            DualMap::Printed,
            MimachiMode::Numeric {
                tol: 1e-8,
                points: 12,
                seed: 7,
            },
        )
        .unwrap();
        assert!(r.pass, "residual {}", r.max_residual);
    }

    #[test]
    fn dual_map_discrimination_beyond_one_one() {
        // (0,1/2,1/2) at (n,m) = (1,2): the half-shifted dual map satisfies
        // the identity, the printed one does not
        let p = BcParameters::new(rat(0, 1), rat(1, 2), rat(1, 2));
        let mode = MimachiMode::Numeric {
            tol: 1e-8,
            points: 12,
            seed: 11,
        };
        let printed = mimachi_check(1, 2, &p, DualMap::Printed, mode).unwrap();
        let shifted = mimachi_check(1, 2, &p, DualMap::HalfShifted, mode).unwrap();
        assert!(!printed.pass, "printed map unexpectedly passed");
        assert!(shifted.pass, "residual {}", shifted.max_residual);
    }
}
