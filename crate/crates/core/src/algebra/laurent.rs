use super::{AlgebraError, Ring, ToF64};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered variable list shared by Laurent polynomials of one ring.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        VarSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// The standard eigenvalue variables z1..zn (just "z" when n = 1).
    pub fn z_vars(n: usize) -> Self {
        if n == 1 {
            VarSet::new(["z"])
        } else {
            VarSet::new((1..=n).map(|i| format!("z{i}")))
        }
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for VarSet {}

/// Multivariate polynomial with integer (possibly negative) exponents.
///
/// The exponent keys are dense fixed-length vectors keyed by the variable
/// list; no zero coefficient is ever stored. The constant term doubles as the
/// normalized Haar integral over the torus.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPolynomial<C: Ring> {
    vars: VarSet,
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: Ring> LaurentPolynomial<C> {
    pub fn zero(vars: &VarSet) -> Self {
        LaurentPolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn monomial(vars: &VarSet, exps: Vec<i32>, c: C) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `name` raised to `power` (negative powers allowed).
    pub fn var_pow(vars: &VarSet, name: &str, power: i32) -> Self {
        let idx = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable `{name}`"));
        let mut exps = vec![0; vars.len()];
        exps[idx] = power;
        Self::monomial(vars, exps, C::one())
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_term(&mut self, exps: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars, "variable-set mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, v) in &self.terms {
            out.insert_term(e.clone(), v.mul(c));
        }
        out
    }

    /// Exact product; errors on a variable-set mismatch.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.vars != rhs.vars {
            return Err(AlgebraError::VariableMismatch(
                format!("{:?}", self.vars.names()),
                format!("{:?}", rhs.vars.names()),
            ));
        }
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(e, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("variable-set mismatch")
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficient of the zero exponent vector: the torus Haar integral.
    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn coeff(&self, exps: &[i32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Substitute z_i -> 1/z_i for every variable.
    pub fn invert_vars(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.iter().map(|&x| -x).collect(), c.clone());
        }
        out
    }

    /// Substitute z_i -> -z_i for every variable.
    pub fn negate_vars(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let parity: i32 = e.iter().map(|&x| x.rem_euclid(2)).sum();
            let v = if parity % 2 == 1 { c.neg() } else { c.clone() };
            out.terms.insert(e.clone(), v);
        }
        out
    }

    /// Total degree of the highest term (max over terms of sum of positive parts).
    pub fn max_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn map_coefficients<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPolynomial<D> {
        let mut out = LaurentPolynomial::zero(&self.vars);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), f(c));
        }
        out
    }

    /// Exact evaluation at a full assignment of variable values.
    pub fn evaluate(&self, point: &[C]) -> Result<C, AlgebraError>
    where
        C: super::Field,
    {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::UnassignedVariable(format!(
                "expected {} values",
                self.vars.len()
            )));
        }
        for (i, v) in point.iter().enumerate() {
            if v.is_zero() && self.terms.keys().any(|e| e[i] < 0) {
                return Err(AlgebraError::ZeroWithNegativeExponent(
                    self.vars.names()[i].clone(),
                ));
            }
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &p) in e.iter().enumerate() {
                let base = if p >= 0 {
                    point[i].clone()
                } else {
                    point[i].inv()
                };
                for _ in 0..p.unsigned_abs() {
                    t = t.mul(&base);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }
}

impl<C: Ring + ToF64> LaurentPolynomial<C> {
    /// Numeric evaluation at complex points (torus points in practice).
    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64(), 0.0);
            for (i, &p) in e.iter().enumerate() {
                t *= point[i].powi(p);
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let m: f64 = e
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| point[i].powi(p))
                    .product();
                c.to_f64() * m
            })
            .sum()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(j, &p)| {
                    if p == 1 {
                        self.vars.names()[j].clone()
                    } else {
                        format!("{}^{}", self.vars.names()[j], p)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*{}", c, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_int, Rat};

    fn z1() -> VarSet {
        VarSet::z_vars(1)
    }

    fn zp(p: i32) -> LaurentPolynomial<Rat> {
        LaurentPolynomial::var_pow(&z1(), "z", p)
    }

    #[test]
    fn difference_of_squares() {
        // (z + z^-1)(z - z^-1) = z^2 - z^-2
        let a = zp(1).add(&zp(-1));
        let b = zp(1).sub(&zp(-1));
        let p = a.mul(&b);
        assert_eq!(p, zp(2).sub(&zp(-2)));
    }

    #[test]
    fn expansion_one_minus_z() {
        // (1 - z)(1 - z^-1) = 2 - z - z^-1
        let one = LaurentPolynomial::one(&z1());
        let p = one.sub(&zp(1)).mul(&one.sub(&zp(-1)));
        let expect = LaurentPolynomial::constant(&z1(), rat_int(2))
            .sub(&zp(1))
            .sub(&zp(-1));
        assert_eq!(p, expect);
    }

    #[test]
    fn torus_modulus_squared() {
        // (1 - z^2)(1 - z^-2) = 2 - z^2 - z^-2
        let one = LaurentPolynomial::one(&z1());
        let p = one.sub(&zp(2)).mul(&one.sub(&zp(-2)));
        let expect = LaurentPolynomial::constant(&z1(), rat_int(2))
            .sub(&zp(2))
            .sub(&zp(-2));
        assert_eq!(p, expect);
    }

    #[test]
    fn constant_terms() {
        let one = LaurentPolynomial::one(&z1());
        let two_minus = LaurentPolynomial::constant(&z1(), rat_int(2))
            .sub(&zp(1))
            .sub(&zp(-1));
        assert_eq!(two_minus.constant_term(), rat_int(2));
        // CT[(1+z)(1+z^-1)(2-z-z^-1)] = 2
        let f = one.add(&zp(1)).mul(&one.add(&zp(-1))).mul(&two_minus);
        assert_eq!(f.constant_term(), rat_int(2));
        assert_eq!(zp(3).constant_term(), rat_int(0));
    }

    #[test]
    fn evaluate_at_minus_one() {
        let p = zp(1).add(&zp(-1));
        let v = p.evaluate(&[rat_int(-1)]).unwrap();
        assert_eq!(v, rat_int(-2));
    }

    #[test]
    fn evaluate_rejects_zero_with_negative_exponent() {
        let p = zp(-1);
        assert!(p.evaluate(&[rat_int(0)]).is_err());
    }

    #[test]
    fn mismatch_rejected() {
        let a: LaurentPolynomial<Rat> = LaurentPolynomial::one(&VarSet::z_vars(1));
        let b: LaurentPolynomial<Rat> = LaurentPolynomial::one(&VarSet::z_vars(2));
        assert!(a.checked_mul(&b).is_err());
    }
}
