use super::{Rat, Ring};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered list of formal parameter names, shared by all polynomials of one field.
#[derive(Clone, Debug)]
pub struct ParamSet(Arc<Vec<String>>);

impl ParamSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        ParamSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for ParamSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for ParamSet {}

/// Graded-lexicographic comparison of exponent vectors.
fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Multivariate polynomial over exact rationals in a named parameter set.
///
/// Terms are keyed by dense exponent vectors; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    params: ParamSet,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(params: &ParamSet) -> Self {
        MultiPoly {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: &ParamSet, c: Rat) -> Self {
        let mut p = Self::zero(params);
        if !c.is_zero() {
            p.terms.insert(vec![0; params.len()], c);
        }
        p
    }

    pub fn one(params: &ParamSet) -> Self {
        Self::constant(params, <Rat as Ring>::one())
    }

    pub fn var(params: &ParamSet, name: &str) -> Self {
        let idx = params
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown parameter `{name}`"));
        let mut exps = vec![0; params.len()];
        exps[idx] = 1;
        let mut p = Self::zero(params);
        p.terms.insert(exps, <Rat as Ring>::one());
        p
    }

    pub fn monomial(params: &ParamSet, exps: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exps.len(), params.len());
        let mut p = Self::zero(params);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(<Rat as Ring>::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    /// Leading term under graded lex; None for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.params);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiply by a single monomial in variable `idx`.
    fn mul_var_power(&self, idx: usize, power: u32) -> Self {
        let mut out = Self::zero(&self.params);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[idx] += power;
            out.terms.insert(e2, c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.params);
        for _ in 0..n {
            acc = Ring::mul(&acc, self);
        }
        acc
    }

    /// Coefficient of `var^d` as a polynomial in the remaining variables
    /// (still carried on the full parameter set, with exponent 0 in `idx`).
    pub fn coeff_of_power(&self, idx: usize, d: u32) -> Self {
        let mut out = Self::zero(&self.params);
        for (e, c) in &self.terms {
            if e[idx] == d {
                let mut e2 = e.clone();
                e2[idx] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    /// Exact multivariate division; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.params, divisor.params);
        if divisor.terms.is_empty() {
            return None;
        }
        let (dle, dlc) = divisor.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.params);
        while let Some((rle, rlc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let mut qe = Vec::with_capacity(rle.len());
            for (a, b) in rle.iter().zip(dle.iter()) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = &rlc / &dlc;
            let t = Self::monomial(&self.params, qe, qc);
            rem = Ring::sub(&rem, &Ring::mul(&t, divisor));
            quot = Ring::add(&quot, &t);
        }
        Some(quot)
    }

    fn leading_coeff_in(&self, idx: usize) -> Self {
        self.coeff_of_power(idx, self.degree_in(idx))
    }

    /// GCD of the coefficients with respect to variable `idx` (content).
    fn content_in(&self, idx: usize) -> Self {
        let mut acc = Self::zero(&self.params);
        for d in 0..=self.degree_in(idx) {
            let c = self.coeff_of_power(idx, d);
            if !Ring::is_zero(&c) {
                acc = Self::gcd(&acc, &c);
            }
        }
        acc
    }

    /// Monic normalization under graded lex: divide by the leading coefficient.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = <Rat as Ring>::one() / lc;
                self.scale(&inv)
            }
        }
    }

    fn highest_active_var(&self) -> Option<usize> {
        (0..self.params.len()).rev().find(|&i| self.degree_in(i) > 0)
    }

    /// Pseudo-remainder of `self` by `g` in variable `idx`.
    fn prem(&self, g: &Self, idx: usize) -> Self {
        let dg = g.degree_in(idx);
        let lg = g.leading_coeff_in(idx);
        let mut r = self.clone();
        while !Ring::is_zero(&r) && r.degree_in(idx) >= dg {
            let dr = r.degree_in(idx);
            let lr = r.leading_coeff_in(idx);
            let t = Ring::mul(&lr, g).mul_var_power(idx, dr - dg);
            r = Ring::sub(&Ring::mul(&lg, &r), &t);
        }
        r
    }

    /// Multivariate GCD over Q by primitive pseudo-remainder sequences,
    /// normalized monic under graded lex.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if Ring::is_zero(a) {
            return b.normalized();
        }
        if Ring::is_zero(b) {
            return a.normalized();
        }
        let v = match a.highest_active_var().max(b.highest_active_var()) {
            None => return Self::one(&a.params),
            Some(v) => v,
        };
        if a.degree_in(v) == 0 || b.degree_in(v) == 0 {
            // one side is free of the main variable: gcd divides contents
            let (flat, other) = if a.degree_in(v) == 0 { (a, b) } else { (b, a) };
            return Self::gcd(flat, &other.content_in(v)).normalized();
        }
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let c = Self::gcd(&ca, &cb);
        let mut f = a.exact_div(&ca).expect("content divides");
        let mut g = b.exact_div(&cb).expect("content divides");
        if f.degree_in(v) < g.degree_in(v) {
            std::mem::swap(&mut f, &mut g);
        }
        let result = loop {
            let r = f.prem(&g, v);
            if Ring::is_zero(&r) {
                break g;
            }
            if r.degree_in(v) == 0 {
                break Self::one(&a.params);
            }
            let rc = r.content_in(v);
            let rp = r.exact_div(&rc).expect("content divides");
            f = g;
            g = rp;
        };
        let pp = {
            let rc = result.content_in(v);
            result.exact_div(&rc).expect("content divides")
        };
        Ring::mul(&c, &pp).normalized()
    }

    pub fn eval_rat(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.params.len());
        let mut acc = <Rat as Ring>::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.params.len());
        self.terms
            .iter()
            .map(|(e, c)| {
                let m: f64 = e
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| point[i].powi(p as i32))
                    .product();
                super::ToF64::to_f64(c) * m
            })
            .sum()
    }

    /// Substitute `replacement` for variable `idx` (Horner in that variable).
    pub fn substitute(&self, idx: usize, replacement: &Self) -> Self {
        assert_eq!(self.params, replacement.params);
        let d = self.degree_in(idx);
        let mut acc = self.coeff_of_power(idx, d);
        for k in (0..d).rev() {
            acc = Ring::add(&Ring::mul(&acc, replacement), &self.coeff_of_power(idx, k));
        }
        acc
    }

    /// Re-express on a different parameter set; every old name must appear in `target`.
    pub fn embed(&self, target: &ParamSet) -> Self {
        let map: Vec<usize> = self
            .params
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .unwrap_or_else(|| panic!("parameter `{n}` missing from target set"))
            })
            .collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u32; target.len()];
            for (i, &p) in e.iter().enumerate() {
                e2[map[i]] = p;
            }
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Swap two parameters by name (e.g. q <-> t for the dual Cauchy identity).
    pub fn swap_params(&self, a: &str, b: &str) -> Self {
        let ia = self.params.index_of(a).expect("param");
        let ib = self.params.index_of(b).expect("param");
        let mut out = Self::zero(&self.params);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(ia, ib);
            out.insert_term(e2, c.clone());
        }
        out
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        panic!("MultiPoly::zero requires a parameter set; use MultiPoly::zero(&params)")
    }
    fn one() -> Self {
        panic!("MultiPoly::one requires a parameter set; use MultiPoly::one(&params)")
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.params, rhs.params, "parameter-set mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.params, rhs.params, "parameter-set mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.params, rhs.params, "parameter-set mismatch");
        let mut out = Self::zero(&self.params);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(e, ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| grlex(b.0, a.0));
        for (i, (e, c)) in ts.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(j, &p)| {
                    if p == 1 {
                        self.params.names()[j].clone()
                    } else {
                        format!("{}^{}", self.params.names()[j], p)
                    }
                })
                .collect();
            let is_neg = **c < <Rat as Ring>::zero();
            let mag = if is_neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if is_neg {
                    write!(f, "-")?;
                }
            } else if is_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if num_traits::One::is_one(&mag) {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;

    fn qt() -> ParamSet {
        ParamSet::new(["q", "t"])
    }

    #[test]
    fn mul_and_display() {
        let ps = qt();
        let q = MultiPoly::var(&ps, "q");
        let t = MultiPoly::var(&ps, "t");
        let one = MultiPoly::one(&ps);
        // (1-q)(1+q) = 1 - q^2
        let p = Ring::mul(&Ring::sub(&one, &q), &Ring::add(&one, &q));
        assert_eq!(p, Ring::sub(&one, &Ring::mul(&q, &q)));
        let _ = format!("{}", Ring::add(&p, &t));
    }

    #[test]
    fn gcd_bivariate() {
        let ps = qt();
        let q = MultiPoly::var(&ps, "q");
        let t = MultiPoly::var(&ps, "t");
        let one = MultiPoly::one(&ps);
        let a = Ring::sub(&one, &Ring::mul(&q, &t)); // 1 - qt
        let b = Ring::sub(&one, &q); // 1 - q
        let f = Ring::mul(&a, &b);
        let g = Ring::mul(&a, &Ring::add(&one, &t));
        let d = MultiPoly::gcd(&f, &g);
        // normalized version of (1 - qt): monic leading term => -(1-qt)/1 ... grlex leading term is qt with coeff -1
        let expect = a.scale(&(-rat_int(1)));
        assert_eq!(d, expect.normalized().scale(&rat_int(1)));
        assert!(f.exact_div(&d).is_some());
        assert!(g.exact_div(&d).is_some());
    }

    #[test]
    fn exact_div_detects_remainder() {
        let ps = qt();
        let q = MultiPoly::var(&ps, "q");
        let one = MultiPoly::one(&ps);
        let f = Ring::sub(&one, &Ring::mul(&q, &q));
        assert!(f.exact_div(&Ring::sub(&one, &q)).is_some());
        assert!(f.exact_div(&Ring::add(&one, &Ring::add(&q, &q))).is_none());
    }

    #[test]
    fn substitute_power() {
        // substitute u -> t^2 in (1-u)
        let ps = ParamSet::new(["t", "u"]);
        let u = MultiPoly::var(&ps, "u");
        let t = MultiPoly::var(&ps, "t");
        let one = MultiPoly::one(&ps);
        let f = Ring::sub(&one, &u);
        let g = f.substitute(1, &Ring::mul(&t, &t));
        assert_eq!(g, Ring::sub(&one, &Ring::mul(&t, &t)));
    }
}
