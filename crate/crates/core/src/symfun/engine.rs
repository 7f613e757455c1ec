//! Orthogonal polynomial engine over the deformed power-sum inner product.
//!
//! A family P_lambda = m_lambda + (strictly dominance-smaller terms) is pinned
//! down by orthogonality to every m_mu with mu <_A lambda; the coefficients
//! solve the Gram system on the dominance downset, so the construction never
//! assumes the orthogonality theorem it is later tested against.

use super::products::{alpha_params, pow, qt_params};
use super::{inner_product, monomial_to_powersum, PowerFactor, SymBasis, SymmetricElement};
use crate::algebra::{solve_linear, Field, FromRat, Rat, RationalFunction, Ring};
use crate::partitions::{dominance_downset_a, Partition};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Parameter content of an engine: Macdonald-type (q,t) or Jack-type alpha.
#[derive(Clone, Debug)]
pub enum EngineParams<F> {
    Qt { q: F, t: F },
    Jack { alpha: F },
}

/// One constructed polynomial: monomial expansion, power-sum expansion, norm.
#[derive(Clone, Debug)]
pub struct CachedPoly<F: Ring> {
    pub m: SymmetricElement<F>,
    pub p: SymmetricElement<F>,
    pub norm: F,
}

/// Gram-Schmidt engine; results are memoized and safe for concurrent use
/// (idempotent inserts under a mutex).
pub struct OrthogonalEngine<F: Field + FromRat> {
    params: EngineParams<F>,
    factor: PowerFactor<F>,
    cache: Mutex<HashMap<Partition, Arc<CachedPoly<F>>>>,
}

impl<F: Field + FromRat> OrthogonalEngine<F> {
    pub fn new(params: EngineParams<F>) -> Self {
        let factor: PowerFactor<F> = match &params {
            EngineParams::Qt { q, t } => {
                let (q, t) = (q.clone(), t.clone());
                Arc::new(move |k: u32| {
                    let one = F::one();
                    one.sub(&pow(&q, k)).div(&one.sub(&pow(&t, k)))
                })
            }
            EngineParams::Jack { alpha } => {
                let a = alpha.clone();
                Arc::new(move |_| a.clone())
            }
        };
        OrthogonalEngine {
            params,
            factor,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &EngineParams<F> {
        &self.params
    }

    /// The power-sum factor b_k with <p_k, p_k> = k b_k.
    pub fn power_factor(&self) -> &PowerFactor<F> {
        &self.factor
    }

    pub fn inner(&self, f: &SymmetricElement<F>, g: &SymmetricElement<F>) -> F {
        inner_product(f, g, &self.factor)
    }

    /// The monic orthogonal polynomial indexed by lambda.
    pub fn polynomial(&self, lambda: &Partition) -> Arc<CachedPoly<F>> {
        if let Some(p) = self.cache.lock().unwrap().get(lambda) {
            return p.clone();
        }
        let built = self.build(lambda);
        let mut cache = self.cache.lock().unwrap();
        cache
            .entry(lambda.clone())
            .or_insert_with(|| Arc::new(built))
            .clone()
    }

    fn build(&self, lambda: &Partition) -> CachedPoly<F> {
        let mut downset = dominance_downset_a(lambda);
        downset.retain(|mu| mu != lambda);
        // power-sum representations of the monomials involved
        let m_elem = |mu: &Partition| -> SymmetricElement<F> {
            SymmetricElement::single(SymBasis::MonomialA, mu.clone(), F::one())
        };
        let p_reps: Vec<SymmetricElement<F>> = downset
            .iter()
            .map(|mu| monomial_to_powersum(&m_elem(mu)))
            .collect();
        let p_lam = monomial_to_powersum(&m_elem(lambda));
        let k = downset.len();
        let mut coeffs: Vec<F> = Vec::new();
        if k > 0 {
            let mut gram = vec![vec![F::zero(); k]; k];
            let mut rhs = vec![F::zero(); k];
            for i in 0..k {
                for j in 0..=i {
                    let v = inner_product(&p_reps[i], &p_reps[j], &self.factor);
                    gram[i][j] = v.clone();
                    gram[j][i] = v;
                }
                rhs[i] = inner_product(&p_reps[i], &p_lam, &self.factor).neg();
            }
            coeffs = solve_linear(gram, rhs);
        }
        let mut m = m_elem(lambda);
        let mut p = p_lam;
        for (i, mu) in downset.iter().enumerate() {
            if coeffs[i].is_zero() {
                continue;
            }
            m = m.add(&m_elem(mu).scale(&coeffs[i]));
            p = p.add(&p_reps[i].scale(&coeffs[i]));
        }
        let norm = inner_product(&p, &p, &self.factor);
        CachedPoly { m, p, norm }
    }
}

/// Macdonald engine over the formal field Q(q,t).
pub fn macdonald_formal() -> OrthogonalEngine<RationalFunction> {
    let (_, q, t) = qt_params();
    OrthogonalEngine::new(EngineParams::Qt { q, t })
}

/// Macdonald engine with the roles of the two formal parameters swapped,
/// producing P_lambda(x; t, q).
pub fn macdonald_formal_swapped() -> OrthogonalEngine<RationalFunction> {
    let (_, q, t) = qt_params();
    OrthogonalEngine::new(EngineParams::Qt { q: t, t: q })
}

/// Macdonald engine at exact rational (q,t); all coefficients are exact.
pub fn macdonald_numeric(q: Rat, t: Rat) -> OrthogonalEngine<Rat> {
    OrthogonalEngine::new(EngineParams::Qt { q, t })
}

/// Macdonald engine in double precision.
pub fn macdonald_f64(q: f64, t: f64) -> OrthogonalEngine<f64> {
    OrthogonalEngine::new(EngineParams::Qt { q, t })
}

/// Jack engine over the formal field Q(alpha).
pub fn jack_formal() -> OrthogonalEngine<RationalFunction> {
    let (_, alpha) = alpha_params();
    OrthogonalEngine::new(EngineParams::Jack { alpha })
}

/// Jack engine at exact rational alpha.
pub fn jack_numeric(alpha: Rat) -> OrthogonalEngine<Rat> {
    OrthogonalEngine::new(EngineParams::Jack { alpha })
}

/// Schur polynomials: the Jack engine at alpha = 1.
pub fn schur() -> OrthogonalEngine<Rat> {
    jack_numeric(crate::algebra::rat_int(1))
}

/// Q-normalization Q_lambda = (c_lambda / c'_lambda) P_lambda for a (q,t) engine.
pub fn macdonald_q_scale<F: Field + FromRat>(
    engine: &OrthogonalEngine<F>,
    lambda: &Partition,
) -> F {
    match engine.params() {
        EngineParams::Qt { q, t } => {
            let (c, cp) = super::products::c_products_generic(lambda, q, t);
            c.div(&cp)
        }
        EngineParams::Jack { .. } => panic!("Q-normalization needs a (q,t) engine"),
    }
}
