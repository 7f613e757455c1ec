//! The Heckman-Opdam weight on the n-torus, as an exact Laurent polynomial
//! for integer parameters and as a callable on angles for any admissible ones.

use super::{BcError, BcParameters};
use crate::algebra::{LaurentPolynomial, Rat, ToF64, VarSet};
use num_traits::ToPrimitive;

fn as_u32(r: &Rat) -> Option<u32> {
    if r.is_integer() {
        r.numer().to_u32()
    } else {
        None
    }
}

/// Exact Laurent form of Delta^HO(z; k1,k2,k3); requires integer parameters.
pub fn ho_weight_laurent(
    params: &BcParameters,
    vars: &VarSet,
) -> Result<LaurentPolynomial<Rat>, BcError> {
    let (k1, k2, k3) = match (as_u32(&params.k1), as_u32(&params.k2), as_u32(&params.k3)) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Err(BcError::NonIntegralWeight(params.to_string())),
    };
    let n = vars.len();
    let one = LaurentPolynomial::<Rat>::one(vars);
    let vp = |i: usize, p: i32| -> LaurentPolynomial<Rat> {
        let mut e = vec![0i32; n];
        e[i] = p;
        LaurentPolynomial::monomial(vars, e, crate::algebra::rat_int(1))
    };
    let pair = |i: usize, pi: i32, j: usize, pj: i32| -> LaurentPolynomial<Rat> {
        let mut e = vec![0i32; n];
        e[i] = pi;
        e[j] = pj;
        LaurentPolynomial::monomial(vars, e, crate::algebra::rat_int(1))
    };
    let mut w = one.clone();
    for j in 0..n {
        // |1 - z_j|^{2 k1} = ((1 - z)(1 - 1/z))^{k1}
        let f1 = one.sub(&vp(j, 1)).mul(&one.sub(&vp(j, -1)));
        w = w.mul(&f1.pow(k1));
        // |1 - z_j^2|^{2 k2}
        let f2 = one.sub(&vp(j, 2)).mul(&one.sub(&vp(j, -2)));
        w = w.mul(&f2.pow(k2));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            // |1 - z_i/z_j|^{2 k3} |1 - z_i z_j|^{2 k3}
            let fd = one
                .sub(&pair(i, 1, j, -1))
                .mul(&one.sub(&pair(i, -1, j, 1)));
            let fs = one.sub(&pair(i, 1, j, 1)).mul(&one.sub(&pair(i, -1, j, -1)));
            w = w.mul(&fd.pow(k3)).mul(&fs.pow(k3));
        }
    }
    Ok(w)
}

/// Callable form of the weight on angle vectors, for any admissible parameters.
pub fn ho_weight_callable(params: &BcParameters) -> impl Fn(&[f64]) -> f64 + Send + Sync + Clone {
    let k1 = params.k1_f64();
    let k2 = params.k2_f64();
    let k3 = params.k3_f64();
    move |angles: &[f64]| {
        let n = angles.len();
        let mut acc = 1.0f64;
        for j in 0..n {
            let a = 2.0 - 2.0 * angles[j].cos();
            let b = 2.0 - 2.0 * (2.0 * angles[j]).cos();
            if k1 != 0.0 {
                acc *= a.powf(k1);
            }
            if k2 != 0.0 {
                acc *= b.powf(k2);
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let d = 2.0 - 2.0 * (angles[i] - angles[j]).cos();
                let s = 2.0 - 2.0 * (angles[i] + angles[j]).cos();
                if k3 != 0.0 {
                    acc *= (d * s).powf(k3);
                }
            }
        }
        acc
    }
}

/// Per-variable Jacobi exponents (a, b) of the weight in c = cos(theta)
/// coordinates: (1-c)^a (1+c)^b with a = k1 + k2 - 1/2, b = k2 - 1/2.
pub fn jacobi_exponents(params: &BcParameters) -> (f64, f64) {
    let a = params.k1_f64() + params.k2_f64() - 0.5;
    let b = params.k2_f64() - 0.5;
    (a, b)
}

/// The constant C with  int_{T^n} F dHaar = C * int_{[-1,1]^n} F(c) *
/// prod_j (1-c_j)^a (1+c_j)^b * prod_{i<j} |c_i - c_j|^{2 k3} dc.
pub fn weight_c_normalization(params: &BcParameters, n: usize) -> f64 {
    let k1 = params.k1_f64();
    let k2 = params.k2_f64();
    let k3 = params.k3_f64();
    let per_var = 2f64.powf(k1) * 4f64.powf(k2) / std::f64::consts::PI;
    let pairs = (n * (n - 1) / 2) as f64;
    per_var.powi(n as i32) * 4f64.powf(k3 * pairs)
}
