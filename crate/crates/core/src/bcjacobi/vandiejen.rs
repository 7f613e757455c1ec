//! Closed product evaluation of BC Jacobi polynomials at the all-ones point,
//! with an epsilon-regularized exact path through removable 0/0 factor pairs
//! (perturb k2 by a formal infinitesimal, reduce, evaluate at zero).

use super::BcParameters;
use crate::algebra::{rat, rat_int, MultiPoly, ParamSet, Rat, RationalFunction, Ring};
use crate::partitions::Partition;
use crate::specialfun::pochhammer_rat;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VanDiejenError {
    #[error("partition longer than the variable count")]
    LengthOverflow,
    #[error("pole in a Pochhammer ratio: {0}")]
    Pole(String),
}

fn poch_poly(ps: &ParamSet, base: &MultiPoly, n: u32) -> MultiPoly {
    let mut acc = MultiPoly::one(ps);
    for i in 0..n {
        let shifted = Ring::add(base, &MultiPoly::constant(ps, rat_int(i as i64)));
        acc = Ring::mul(&acc, &shifted);
    }
    acc
}

/// P^HO_lambda(1,...,1) over m variables by the Pochhammer product formula.
///
/// The formula has matched vanishing factor pairs at degenerate parameter
/// triples (k1 = k2 = 0 with full-length lambda, for one); those are resolved
/// by the epsilon limit, and a genuine pole is reported with the factor that
/// produced it.
pub fn vandiejen_eval_ones(
    lambda: &Partition,
    m: usize,
    params: &BcParameters,
) -> Result<Rat, VanDiejenError> {
    if lambda.length() > m {
        return Err(VanDiejenError::LengthOverflow);
    }
    let ps = ParamSet::new(["e"]);
    let e = MultiPoly::var(&ps, "e");
    let cst = |r: Rat| MultiPoly::constant(&ps, r);
    let half = rat(1, 2);
    // rho_j = (m - j) k3 + k1/2 + k2 + e, 1-indexed j
    let rho = |j: usize| -> MultiPoly {
        let base = &params.k3 * rat_int((m - j) as i64) + &params.k1 * &half + &params.k2;
        Ring::add(&cst(base), &e)
    };
    let mut num = cst(rat_int(1));
    let mut den = cst(rat_int(1));
    let mut den_factors: Vec<(String, MultiPoly)> = Vec::new();
    let lam = |j: usize| lambda.part(j);
    for i in 1..=m {
        for j in (i + 1)..=m {
            let sum = Ring::add(&rho(i), &rho(j));
            let diff = Ring::sub(&rho(i), &rho(j));
            let k3 = cst(params.k3.clone());
            num = Ring::mul(
                &num,
                &poch_poly(&ps, &Ring::add(&sum, &k3), lam(i) + lam(j)),
            );
            num = Ring::mul(
                &num,
                &poch_poly(&ps, &Ring::add(&diff, &k3), lam(i) - lam(j)),
            );
            let d1 = poch_poly(&ps, &sum, lam(i) + lam(j));
            let d2 = poch_poly(&ps, &diff, lam(i) - lam(j));
            den_factors.push((format!("(rho_{i}+rho_{j})_({})", lam(i) + lam(j)), d1.clone()));
            den_factors.push((format!("(rho_{i}-rho_{j})_({})", lam(i) - lam(j)), d2.clone()));
            den = Ring::mul(&den, &Ring::mul(&d1, &d2));
        }
    }
    for j in 1..=m {
        let a1 = Ring::add(
            &Ring::add(&cst(&params.k1 * &half), &cst(params.k2.clone())),
            &Ring::add(&e, &rho(j)),
        );
        let a2 = Ring::add(&cst((&params.k1 + rat_int(1)) * &half), &rho(j));
        num = Ring::mul(&num, &poch_poly(&ps, &a1, lam(j)));
        num = Ring::mul(&num, &poch_poly(&ps, &a2, lam(j)));
        let two_rho = Ring::add(&rho(j), &rho(j));
        let d = poch_poly(&ps, &two_rho, 2 * lam(j));
        den_factors.push((format!("(2 rho_{j})_({})", 2 * lam(j)), d.clone()));
        den = Ring::mul(&den, &d);
    }
    let rf = RationalFunction::new(num, den);
    match rf.eval_rat(&[<Rat as Ring>::zero()]) {
        Some(v) => {
            let scale = pow2(2 * lambda.weight());
            Ok(v * scale)
        }
        None => {
            let culprit: Vec<String> = den_factors
                .iter()
                .filter(|(_, f)| Ring::is_zero(&f.eval_rat(&[<Rat as Ring>::zero()])))
                .map(|(name, _)| name.clone())
                .collect();
            Err(VanDiejenError::Pole(culprit.join(", ")))
        }
    }
}

/// Simplified product for rectangular lambda = (n^m):
/// prod_{j=0}^{m-1} 2^{2n} (k1+k2+1/2+j k3)_n / (n+k1+2k2+j k3)_n.
pub fn vandiejen_rectangular(
    n: u32,
    m: usize,
    params: &BcParameters,
) -> Result<Rat, VanDiejenError> {
    let half = rat(1, 2);
    let mut acc = rat_int(1);
    for j in 0..m {
        let a = &params.k1 + &params.k2 + &half + &params.k3 * rat_int(j as i64);
        let b = rat_int(n as i64) + &params.k1 + &params.k2 * rat_int(2) + &params.k3 * rat_int(j as i64);
        let den = pochhammer_rat(&b, n);
        if Ring::is_zero(&den) {
            return Err(VanDiejenError::Pole(format!("(n+k1+2k2+{j} k3)_{n}")));
        }
        acc *= pow2(2 * n) * pochhammer_rat(&a, n) / den;
    }
    Ok(acc)
}

fn pow2(e: u32) -> Rat {
    let mut acc = rat_int(1);
    for _ in 0..e {
        acc *= rat_int(2);
    }
    acc
}
