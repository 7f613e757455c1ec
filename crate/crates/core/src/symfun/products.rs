//! Hook-type coefficient products, generalized factorials and principal
//! specializations for Macdonald and Jack polynomials.

use super::{monomial_to_powersum, SymBasis, SymmetricElement};
use crate::algebra::{Field, FromRat, ParamSet, Rat, RationalFunction, Ring};
use crate::partitions::Partition;

/// The formal field Q(q,t): parameter set plus the two generators.
pub fn qt_params() -> (ParamSet, RationalFunction, RationalFunction) {
    let ps = ParamSet::new(["q", "t"]);
    let q = RationalFunction::var(&ps, "q");
    let t = RationalFunction::var(&ps, "t");
    (ps, q, t)
}

/// The formal field Q(q,t,u) used by principal specializations.
pub fn qtu_params() -> (ParamSet, RationalFunction, RationalFunction, RationalFunction) {
    let ps = ParamSet::new(["q", "t", "u"]);
    let q = RationalFunction::var(&ps, "q");
    let t = RationalFunction::var(&ps, "t");
    let u = RationalFunction::var(&ps, "u");
    (ps, q, t, u)
}

/// The formal field Q(alpha).
pub fn alpha_params() -> (ParamSet, RationalFunction) {
    let ps = ParamSet::new(["alpha"]);
    let a = RationalFunction::var(&ps, "alpha");
    (ps, a)
}

pub(crate) fn pow<F: Field>(x: &F, k: u32) -> F {
    let mut acc = F::one();
    for _ in 0..k {
        acc = acc.mul(x);
    }
    acc
}

/// c_lambda(q,t) = prod_s (1 - q^{a(s)} t^{l(s)+1}) and
/// c'_lambda(q,t) = prod_s (1 - q^{a(s)+1} t^{l(s)}), over any field.
pub fn c_products_generic<F: Field>(lambda: &Partition, q: &F, t: &F) -> (F, F) {
    let one = F::one();
    let mut c = F::one();
    let mut cp = F::one();
    for s in lambda.all_cell_stats() {
        let f1 = one.sub(&pow(q, s.arm).mul(&pow(t, s.leg + 1)));
        let f2 = one.sub(&pow(q, s.arm + 1).mul(&pow(t, s.leg)));
        c = c.mul(&f1);
        cp = cp.mul(&f2);
    }
    (c, cp)
}

/// Formal (q,t) version of [`c_products_generic`].
pub fn c_products_formal(lambda: &Partition) -> (RationalFunction, RationalFunction) {
    let (_, q, t) = qt_params();
    c_products_generic(lambda, &q, &t)
}

/// Generalized factorial (a)_lambda^{(q,t)} = prod_s (t^{l'(s)} - q^{a'(s)} a).
pub fn gen_factorial<F: Field>(lambda: &Partition, a: &F, q: &F, t: &F) -> F {
    let mut acc = F::one();
    for s in lambda.all_cell_stats() {
        acc = acc.mul(&pow(t, s.leg_co).sub(&pow(q, s.arm_co).mul(a)));
    }
    acc
}

/// Jack generalized factorial [u]_lambda^{(alpha)} = prod_s (u - l'(s)/alpha + a'(s)).
pub fn jack_bracket<F: Field + FromRat>(lambda: &Partition, u: &F, alpha: &F) -> F {
    let mut acc = F::one();
    for s in lambda.all_cell_stats() {
        let lp = F::from_int(s.leg_co as i64);
        let ap = F::from_int(s.arm_co as i64);
        acc = acc.mul(&u.sub(&lp.div(alpha)).add(&ap));
    }
    acc
}

/// c_lambda(alpha) = prod_s (alpha a(s) + l(s) + 1).
pub fn jack_c<F: Field + FromRat>(lambda: &Partition, alpha: &F) -> F {
    let mut acc = F::one();
    for s in lambda.all_cell_stats() {
        let t = alpha
            .mul(&F::from_int(s.arm as i64))
            .add(&F::from_int(s.leg as i64 + 1));
        acc = acc.mul(&t);
    }
    acc
}

/// c'_lambda(alpha) = prod_s (alpha (a(s)+1) + l(s)).
pub fn jack_c_prime<F: Field + FromRat>(lambda: &Partition, alpha: &F) -> F {
    let mut acc = F::one();
    for s in lambda.all_cell_stats() {
        let t = alpha
            .mul(&F::from_int(s.arm as i64 + 1))
            .add(&F::from_int(s.leg as i64));
        acc = acc.mul(&t);
    }
    acc
}

/// The ring homomorphism p_r -> (1 - u^r)/(1 - t^r) applied to a symmetric
/// element (converted to the power-sum basis first when needed).
pub fn epsilon_specialize<F: Field + FromRat>(
    f: &SymmetricElement<F>,
    u: &F,
    t: &F,
) -> F {
    let fp = match f.basis {
        SymBasis::PowerSum => f.clone(),
        SymBasis::MonomialA => monomial_to_powersum(f),
    };
    let one = F::one();
    let mut acc = F::zero();
    for (lam, c) in &fp.coeffs {
        let mut term = c.clone();
        for &r in lam.parts() {
            let num = one.sub(&pow(u, r));
            let den = one.sub(&pow(t, r));
            term = term.mul(&num.div(&den));
        }
        acc = acc.add(&term);
    }
    acc
}

/// Exact power q^k for rational q.
pub fn rat_pow(q: &Rat, k: u32) -> Rat {
    let mut acc = crate::algebra::rat_int(1);
    for _ in 0..k {
        acc *= q;
    }
    acc
}
