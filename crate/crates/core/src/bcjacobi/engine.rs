//! Gram-Schmidt construction of Heckman-Opdam Jacobi polynomials: exact
//! constant-term arithmetic for integer parameters, Gauss-Jacobi quadrature in
//! cosine coordinates otherwise (n <= 2).

use super::monomial::{bc_monomial, BcElement};
use super::weight::{ho_weight_laurent, jacobi_exponents, weight_c_normalization};
use super::{BcError, BcParameters};
use crate::algebra::{solve_linear, LaurentPolynomial, Rat, ToF64, VarSet};
use crate::numerics::{gauss_jacobi, jacobi_pair_integral};
use crate::partitions::{dominance_downset_bc, Partition};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Construction mode: exact CT arithmetic or numeric quadrature.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HoMode {
    Exact,
    /// Numeric Gram-Schmidt; `tol` is the accepted a-posteriori residual.
    Numeric { tol: f64 },
}

/// A constructed BC Jacobi polynomial: monic on m^BC_lambda, supported on the
/// BC dominance downset, with the orthogonality residual of the construction.
#[derive(Clone, Debug)]
pub struct HoJacobiPolynomial {
    pub index: Partition,
    pub params: BcParameters,
    pub n_vars: usize,
    /// Exact expansion (exact mode only).
    pub coeffs_exact: Option<BcElement<Rat>>,
    /// Floating expansion (both modes).
    pub coeffs: BcElement<f64>,
    /// Max normalized |<P, m_mu>| over the strict downset.
    pub residual: f64,
}

impl HoJacobiPolynomial {
    pub fn eval_complex(&self, points: &[Complex64]) -> Complex64 {
        super::monomial::bc_eval_complex(&self.coeffs, points)
    }

    pub fn eval_f64(&self, points: &[f64]) -> f64 {
        let pts: Vec<Complex64> = points.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        self.eval_complex(&pts).re
    }

    pub fn eval_rat(&self, points: &[Rat]) -> Option<Rat> {
        let exact = self.coeffs_exact.as_ref()?;
        Some(super::monomial::bc_eval(exact, points))
    }
}

enum Backend {
    Exact {
        weight: LaurentPolynomial<Rat>,
        vars: VarSet,
    },
    Quadrature {
        a: f64,
        b: f64,
        cross: u32,
        nodes: usize,
        norm_const: f64,
    },
}

/// Engine for one (params, n) pair; constructed polynomials are memoized.
pub struct HoEngine {
    params: BcParameters,
    n: usize,
    mode: HoMode,
    backend: Backend,
    vars: VarSet,
    cache: Mutex<HashMap<Partition, Arc<HoJacobiPolynomial>>>,
    gram_cache: Mutex<HashMap<(Partition, Partition), f64>>,
    gram_cache_exact: Mutex<HashMap<(Partition, Partition), Rat>>,
}

impl HoEngine {
    /// Exact engine; parameters must be nonnegative integers.
    pub fn exact(params: BcParameters, n: usize) -> Result<Self, BcError> {
        let vars = VarSet::z_vars(n);
        let weight = ho_weight_laurent(&params, &vars)?;
        Ok(HoEngine {
            params,
            n,
            mode: HoMode::Exact,
            backend: Backend::Exact {
                weight,
                vars: vars.clone(),
            },
            vars,
            cache: Mutex::new(HashMap::new()),
            gram_cache: Mutex::new(HashMap::new()),
            gram_cache_exact: Mutex::new(HashMap::new()),
        })
    }

    /// Numeric engine via Gauss-Jacobi quadrature in cosine coordinates;
    /// supports n <= 2 and requires 2*k3 integral when n = 2.
    pub fn numeric(params: BcParameters, n: usize, tol: f64) -> Result<Self, BcError> {
        if n > 2 {
            return Err(BcError::DimensionTooLarge(n));
        }
        let (a, b) = jacobi_exponents(&params);
        let two_k3 = &params.k3 * crate::algebra::rat_int(2);
        let cross = if n < 2 {
            0
        } else if two_k3.is_integer() {
            two_k3.numer().to_u32().ok_or(BcError::ZeroK3)?
        } else {
            return Err(BcError::NonIntegralWeight(format!(
                "2*k3 = {two_k3} is not an integer"
            )));
        };
        let norm_const = weight_c_normalization(&params, n);
        Ok(HoEngine {
            params,
            n,
            mode: HoMode::Numeric { tol },
            backend: Backend::Quadrature {
                a,
                b,
                cross,
                nodes: 48,
                norm_const,
            },
            vars: VarSet::z_vars(n),
            cache: Mutex::new(HashMap::new()),
            gram_cache: Mutex::new(HashMap::new()),
            gram_cache_exact: Mutex::new(HashMap::new()),
        })
    }

    /// Pick the exact engine for integral parameters, numeric otherwise.
    pub fn auto(params: BcParameters, n: usize) -> Result<Self, BcError> {
        if params.is_integral() {
            Self::exact(params, n)
        } else {
            Self::numeric(params, n, 1e-8)
        }
    }

    pub fn params(&self) -> &BcParameters {
        &self.params
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> HoMode {
        self.mode
    }

    /// Raw inner product <m_mu, m_nu> = int m_mu(z) m_nu(1/z) Delta^HO dHaar
    /// (the 1/(2^n n!) constant is omitted; it cancels in every normalized use).
    pub fn gram_exact(&self, mu: &Partition, nu: &Partition) -> Rat {
        let key = if mu <= nu {
            (mu.clone(), nu.clone())
        } else {
            (nu.clone(), mu.clone())
        };
        if let Some(v) = self.gram_cache_exact.lock().unwrap().get(&key) {
            return v.clone();
        }
        let Backend::Exact { weight, vars } = &self.backend else {
            panic!("gram_exact on a numeric engine")
        };
        let a: LaurentPolynomial<Rat> = bc_monomial(mu, vars);
        let b: LaurentPolynomial<Rat> = bc_monomial(nu, vars).invert_vars();
        let v = a.mul(&b).mul(weight).constant_term();
        self.gram_cache_exact
            .lock()
            .unwrap()
            .insert(key, v.clone());
        v
    }

    /// Numeric raw inner product (same normalization as [`Self::gram_exact`]).
    pub fn gram_f64(&self, mu: &Partition, nu: &Partition) -> f64 {
        let key = if mu <= nu {
            (mu.clone(), nu.clone())
        } else {
            (nu.clone(), mu.clone())
        };
        if let Some(v) = self.gram_cache.lock().unwrap().get(&key) {
            return *v;
        }
        let v = match &self.backend {
            Backend::Exact { weight, vars } => {
                let a: LaurentPolynomial<Rat> = bc_monomial(mu, vars);
                let b: LaurentPolynomial<Rat> = bc_monomial(nu, vars).invert_vars();
                ToF64::to_f64(&a.mul(&b).mul(weight).constant_term())
            }
            Backend::Quadrature {
                a,
                b,
                cross,
                nodes,
                norm_const,
            } => {
                let f = |cs: &[f64]| -> f64 {
                    let z: Vec<Complex64> = cs
                        .iter()
                        .map(|&c| Complex64::new(c, (1.0 - c * c).max(0.0).sqrt()))
                        .collect();
                    let zb: Vec<Complex64> = z.iter().map(|w| w.conj()).collect();
                    let fa = super::monomial::bc_eval_complex(
                        &single(mu.clone()),
                        &z,
                    );
                    let fb = super::monomial::bc_eval_complex(&single(nu.clone()), &zb);
                    (fa * fb).re
                };
                match self.n {
                    0 => f(&[]),
                    1 => {
                        let deg = (mu.part(1) + nu.part(1)) as usize;
                        let rule = gauss_jacobi((deg / 2 + *nodes).max(8), *a, *b);
                        norm_const * rule.integrate(|c| f(&[c]))
                    }
                    2 => {
                        let base = (mu.part(1) + nu.part(1)) as usize + *nodes;
                        norm_const
                            * jacobi_pair_integral(*a, *b, *cross, base, |c1, c2| f(&[c1, c2]))
                    }
                    _ => unreachable!(),
                }
            }
        };
        self.gram_cache.lock().unwrap().insert(key, v);
        v
    }

    /// The monic BC Jacobi polynomial indexed by lambda.
    pub fn polynomial(&self, lambda: &Partition) -> Result<Arc<HoJacobiPolynomial>, BcError> {
        if lambda.length() > self.n {
            return Err(BcError::LengthOverflow);
        }
        if let Some(p) = self.cache.lock().unwrap().get(lambda) {
            return Ok(p.clone());
        }
        let built = self.build(lambda)?;
        let mut cache = self.cache.lock().unwrap();
        Ok(cache
            .entry(lambda.clone())
            .or_insert_with(|| Arc::new(built))
            .clone())
    }

    fn build(&self, lambda: &Partition) -> Result<HoJacobiPolynomial, BcError> {
        let mut downset = dominance_downset_bc(lambda, self.n);
        downset.retain(|mu| mu != lambda);
        let k = downset.len();
        match self.mode {
            HoMode::Exact => {
                let mut gram = vec![vec![<Rat as crate::algebra::Ring>::zero(); k]; k];
                let mut rhs = vec![<Rat as crate::algebra::Ring>::zero(); k];
                for i in 0..k {
                    for j in 0..=i {
                        let v = self.gram_exact(&downset[i], &downset[j]);
                        gram[i][j] = v.clone();
                        gram[j][i] = v;
                    }
                    rhs[i] = -self.gram_exact(&downset[i], lambda);
                }
                let u = if k > 0 {
                    solve_linear(gram, rhs)
                } else {
                    Vec::new()
                };
                let mut coeffs_exact: BcElement<Rat> = BcElement::new();
                coeffs_exact.insert(lambda.clone(), crate::algebra::rat_int(1));
                for (i, mu) in downset.iter().enumerate() {
                    if !crate::algebra::Ring::is_zero(&u[i]) {
                        coeffs_exact.insert(mu.clone(), u[i].clone());
                    }
                }
                let coeffs: BcElement<f64> = coeffs_exact
                    .iter()
                    .map(|(p, c)| (p.clone(), ToF64::to_f64(c)))
                    .collect();
                Ok(HoJacobiPolynomial {
                    index: lambda.clone(),
                    params: self.params.clone(),
                    n_vars: self.n,
                    coeffs_exact: Some(coeffs_exact),
                    coeffs,
                    residual: 0.0,
                })
            }
            HoMode::Numeric { tol } => {
                let mut gram = vec![vec![0f64; k]; k];
                let mut rhs = vec![0f64; k];
                for i in 0..k {
                    for j in 0..=i {
                        let v = self.gram_f64(&downset[i], &downset[j]);
                        gram[i][j] = v;
                        gram[j][i] = v;
                    }
                    rhs[i] = -self.gram_f64(&downset[i], lambda);
                }
                let u = if k > 0 {
                    solve_linear(gram.clone(), rhs.clone())
                } else {
                    Vec::new()
                };
                if u.iter().any(|x| !x.is_finite()) {
                    return Err(BcError::SingularGram(lambda.to_string()));
                }
                // a-posteriori orthogonality residual, normalized by the mass
                let mass = self.gram_f64(&Partition::empty(), &Partition::empty());
                let mut residual = 0.0f64;
                for i in 0..k {
                    let mut r = -rhs[i];
                    for j in 0..k {
                        r += gram[i][j] * u[j];
                    }
                    residual = residual.max((r / mass).abs());
                }
                if residual > tol {
                    return Err(BcError::SingularGram(format!(
                        "{lambda}: residual {residual} above tolerance {tol}"
                    )));
                }
                let mut coeffs: BcElement<f64> = BcElement::new();
                coeffs.insert(lambda.clone(), 1.0);
                for (i, mu) in downset.iter().enumerate() {
                    if u[i] != 0.0 {
                        coeffs.insert(mu.clone(), u[i]);
                    }
                }
                Ok(HoJacobiPolynomial {
                    index: lambda.clone(),
                    params: self.params.clone(),
                    n_vars: self.n,
                    coeffs_exact: None,
                    coeffs,
                    residual,
                })
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }
}

fn single(mu: Partition) -> BcElement<f64> {
    let mut e = BcElement::new();
    e.insert(mu, 1.0);
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};
    use crate::partitions::dominance_leq_bc;

    #[test]
    fn gram_examples_so3() {
        // (1,0,1), n=1: <1,1> = 2, <m_(1), 1> = -2
        let eng = HoEngine::exact(BcParameters::from_ints(1, 0, 1), 1).unwrap();
        assert_eq!(
            eng.gram_exact(&Partition::empty(), &Partition::empty()),
            rat_int(2)
        );
        assert_eq!(
            eng.gram_exact(&Partition::new([1]), &Partition::empty()),
            rat_int(-2)
        );
    }

    #[test]
    fn gram_uniform_weight() {
        let eng = HoEngine::exact(BcParameters::from_ints(0, 0, 1), 1).unwrap();
        assert_eq!(
            eng.gram_exact(&Partition::empty(), &Partition::empty()),
            rat_int(1)
        );
    }

    #[test]
    fn so3_vector_character() {
        // P_(1) at (1,0,1), n=1 is z + 1/z + 1
        let eng = HoEngine::exact(BcParameters::from_ints(1, 0, 1), 1).unwrap();
        let p = eng.polynomial(&Partition::new([1])).unwrap();
        let e = p.coeffs_exact.as_ref().unwrap();
        assert_eq!(e.get(&Partition::empty()), Some(&rat_int(1)));
        assert_eq!(e.get(&Partition::new([1])), Some(&rat_int(1)));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn parity_kills_constant() {
        // (0,1,1) and (0,0,1): P_(1) = m_(1)
        for params in [
            BcParameters::from_ints(0, 1, 1),
            BcParameters::from_ints(0, 0, 1),
        ] {
            let eng = HoEngine::exact(params, 1).unwrap();
            let p = eng.polynomial(&Partition::new([1])).unwrap();
            assert_eq!(p.coeffs_exact.as_ref().unwrap().len(), 1);
        }
    }

    #[test]
    fn bc_triangularity_and_invariance() {
        let eng = HoEngine::exact(BcParameters::from_ints(1, 0, 1), 2).unwrap();
        let lam = Partition::new([2, 1]);
        let p = eng.polynomial(&lam).unwrap();
        for mu in p.coeffs_exact.as_ref().unwrap().keys() {
            assert!(dominance_leq_bc(mu, &lam));
        }
        // hyperoctahedral invariance of the expansion as a Laurent polynomial
        let l = super::super::bc_element_laurent::<Rat>(
            p.coeffs_exact.as_ref().unwrap(),
            eng.vars(),
        );
        assert_eq!(l, l.invert_vars());
    }

    #[test]
    fn numeric_agrees_with_exact_on_integer_params() {
        let params = BcParameters::from_ints(1, 0, 1);
        let exact = HoEngine::exact(params.clone(), 2).unwrap();
        let numeric = HoEngine::numeric(params, 2, 1e-8).unwrap();
        for lam in [Partition::new([1]), Partition::new([2]), Partition::new([1, 1])] {
            let pe = exact.polynomial(&lam).unwrap();
            let pn = numeric.polynomial(&lam).unwrap();
            for (mu, c) in &pe.coeffs {
                let cn = pn.coeffs.get(mu).copied().unwrap_or(0.0);
                assert!((c - cn).abs() < 1e-8, "lam={lam} mu={mu}: {c} vs {cn}");
            }
            assert!(pn.residual <= 1e-8);
        }
    }

    #[test]
    fn numeric_fractional_parameters_one_variable() {
        // (0,1/2,1/2) at n=1: weight |1-z^2|, uniform in cos(theta).
        // P_(2) = m_(2) + 2/3: E[m_2] = E[2cos 2t] = 2(2E[c^2]-1) = -2/3
        let params = BcParameters::new(rat_int(0), rat(1, 2), rat(1, 2));
        let eng = HoEngine::numeric(params, 1, 1e-8).unwrap();
        let p = eng.polynomial(&Partition::new([2])).unwrap();
        let c0 = p.coeffs.get(&Partition::empty()).copied().unwrap();
        assert!((c0 - 2.0 / 3.0).abs() < 1e-10, "{c0}");
        assert!(p.coeffs.get(&Partition::new([1])).is_none());
    }

    #[test]
    fn negation_covariance_for_even_weight() {
        // k1 = 0: coefficients pair only weights of matching parity
        let eng = HoEngine::exact(BcParameters::from_ints(0, 1, 1), 2).unwrap();
        for lam in [Partition::new([2]), Partition::new([2, 1]), Partition::new([2, 2])] {
            let p = eng.polynomial(&lam).unwrap();
            for mu in p.coeffs_exact.as_ref().unwrap().keys() {
                assert_eq!(
                    mu.weight() % 2,
                    lam.weight() % 2,
                    "parity violation in P_{lam}"
                );
            }
        }
    }

    #[test]
    fn length_overflow_rejected() {
        let eng = HoEngine::exact(BcParameters::from_ints(0, 0, 1), 1).unwrap();
        assert!(eng.polynomial(&Partition::new([1, 1])).is_err());
    }
}
