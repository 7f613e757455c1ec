use super::{Field, FromRat, MultiPoly, ParamSet, Rat, Ring, ToF64};
use std::fmt;

/// Reduced fraction of multivariate polynomials over Q.
///
/// The denominator is nonzero and monic under graded lex, and shares no
/// polynomial factor with the numerator. Constants are carried on an empty
/// parameter set and unify with any other parameter set on contact, so that
/// `Ring::zero`/`Ring::one` need no context.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

fn empty_params() -> ParamSet {
    ParamSet::new(Vec::<String>::new())
}

impl RationalFunction {
    pub fn from_poly(num: MultiPoly) -> Self {
        let den = MultiPoly::one(num.params());
        RationalFunction { num, den }
    }

    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!Ring::is_zero(&den), "zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.reduce();
        rf
    }

    pub fn constant(c: Rat) -> Self {
        let ps = empty_params();
        RationalFunction {
            num: MultiPoly::constant(&ps, c),
            den: MultiPoly::one(&ps),
        }
    }

    pub fn var(params: &ParamSet, name: &str) -> Self {
        Self::from_poly(MultiPoly::var(params, name))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn params(&self) -> &ParamSet {
        self.num.params()
    }

    pub fn is_one(&self) -> bool {
        self == &<Self as Ring>::one()
    }

    fn reduce(&mut self) {
        if Ring::is_zero(&self.num) {
            self.den = MultiPoly::one(self.num.params());
            return;
        }
        let g = MultiPoly::gcd(&self.num, &self.den);
        if let Some(c) = g.as_constant() {
            debug_assert!(!c.is_zero());
        } else {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        let lc = self
            .den
            .leading_term()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = Rat::new(lc.denom().clone(), lc.numer().clone());
        self.num = self.num.scale(&inv);
        self.den = self.den.scale(&inv);
    }

    fn unified(&self, other: &Self) -> (Self, Self) {
        if self.params() == other.params() {
            (self.clone(), other.clone())
        } else if self.params().is_empty() {
            (self.embed(other.params()), other.clone())
        } else if other.params().is_empty() {
            (self.clone(), other.embed(self.params()))
        } else {
            panic!(
                "parameter-set mismatch: {:?} vs {:?}",
                self.params().names(),
                other.params().names()
            )
        }
    }

    pub fn embed(&self, target: &ParamSet) -> Self {
        RationalFunction {
            num: self.num.embed(target),
            den: self.den.embed(target),
        }
    }

    /// Swap two parameters by name, e.g. the (q,t) <-> (t,q) twist.
    pub fn swap_params(&self, a: &str, b: &str) -> Self {
        RationalFunction {
            num: self.num.swap_params(a, b),
            den: self.den.swap_params(a, b),
        }
    }

    /// Substitute a polynomial for one named parameter.
    pub fn substitute(&self, name: &str, replacement: &MultiPoly) -> Self {
        let idx = self.params().index_of(name).expect("parameter");
        let rep = replacement.embed(self.params());
        Self::new(self.num.substitute(idx, &rep), self.den.substitute(idx, &rep))
    }

    /// Exact evaluation; `None` when the point is a pole.
    pub fn eval_rat(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.eval_rat(point);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval_rat(point) / d)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.num.eval_f64(point) / self.den.eval_f64(point)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unified(other);
        // both reduced with monic denominators, so cross-multiplied equality is exact
        Ring::mul(&a.num, &b.den) == Ring::mul(&b.num, &a.den)
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        Self::constant(<Rat as Ring>::zero())
    }
    fn one() -> Self {
        Self::constant(<Rat as Ring>::one())
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.num)
    }
    fn add(&self, rhs: &Self) -> Self {
        let (a, b) = self.unified(rhs);
        Self::new(
            Ring::add(&Ring::mul(&a.num, &b.den), &Ring::mul(&b.num, &a.den)),
            Ring::mul(&a.den, &b.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.unified(rhs);
        Self::new(Ring::mul(&a.num, &b.num), Ring::mul(&a.den, &b.den))
    }
    fn neg(&self) -> Self {
        RationalFunction {
            num: Ring::neg(&self.num),
            den: self.den.clone(),
        }
    }
}

impl Field for RationalFunction {
    fn div(&self, rhs: &Self) -> Self {
        assert!(!Ring::is_zero(rhs), "division by zero rational function");
        let (a, b) = self.unified(rhs);
        Self::new(Ring::mul(&a.num, &b.den), Ring::mul(&a.den, &b.num))
    }
}

impl FromRat for RationalFunction {
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
}

impl ToF64 for RationalFunction {
    fn to_f64(&self) -> f64 {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => ToF64::to_f64(&(n / d)),
            _ => f64::NAN,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map(|c| num_traits::One::is_one(&c)) == Some(true) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    fn qt() -> ParamSet {
        ParamSet::new(["q", "t"])
    }

    #[test]
    fn homomorphism_evaluation() {
        // (1+q)(1-t)/(1-qt) at (1/2, 1/3) -> 6/5
        let ps = qt();
        let q = RationalFunction::var(&ps, "q");
        let t = RationalFunction::var(&ps, "t");
        let one: RationalFunction = Ring::one();
        let f = Field::div(
            &Ring::mul(&Ring::add(&one, &q), &Ring::sub(&one, &t)),
            &Ring::sub(&one, &Ring::mul(&q, &t)),
        );
        assert_eq!(f.eval_rat(&[rat(1, 2), rat(1, 3)]), Some(rat(6, 5)));
        assert_eq!(f.eval_rat(&[rat_int(0), rat_int(0)]), Some(rat_int(1)));
    }

    #[test]
    fn reduction_invariance() {
        let ps = qt();
        let q = RationalFunction::var(&ps, "q");
        let t = RationalFunction::var(&ps, "t");
        let one: RationalFunction = Ring::one();
        let p = Ring::sub(&one, &Ring::mul(&q, &t));
        let r = Ring::add(&one, &q);
        let x = Field::div(&p, &r);
        let y = Field::div(&r, &p);
        assert!(Ring::mul(&x, &y).is_one());
    }

    #[test]
    fn constants_unify() {
        let ps = qt();
        let q = RationalFunction::var(&ps, "q");
        let c = RationalFunction::constant(rat(3, 2));
        let s = Ring::add(&q, &c);
        assert_eq!(s.eval_rat(&[rat(1, 2), rat_int(0)]), Some(rat_int(2)));
    }
}
