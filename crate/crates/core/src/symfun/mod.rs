//! Type A symmetric function engine: monomial and power-sum bases, Macdonald
//! and Jack polynomials by Gram-Schmidt over the power-sum inner product,
//! hook-type coefficient products, principal specializations, the dual Cauchy
//! identity and the two hypergeometric series.

mod engine;
mod products;
mod cauchy;
mod hyper;

pub use cauchy::dual_cauchy_check;
pub use engine::{
    jack_formal, jack_numeric, macdonald_f64, macdonald_formal, macdonald_formal_swapped,
    macdonald_numeric, macdonald_q_scale, schur, CachedPoly, EngineParams, OrthogonalEngine,
};
pub use hyper::{hyper_2f1_alpha, hyper_2phi1_qt, HyperError};
pub use products::{
    alpha_params, c_products_formal, c_products_generic, epsilon_specialize, gen_factorial,
    jack_bracket, jack_c, jack_c_prime, qt_params, qtu_params, rat_pow,
};

use crate::algebra::{Field, FromRat, LaurentPolynomial, Rat, Ring, VarSet};
use crate::partitions::{partitions_of, Partition};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Basis label for homogeneous symmetric elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymBasis {
    MonomialA,
    PowerSum,
}

/// Homogeneous symmetric function, a finite coefficient map over partitions of
/// one fixed weight in the chosen basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricElement<F: Ring> {
    pub basis: SymBasis,
    pub degree: u32,
    pub coeffs: BTreeMap<Partition, F>,
}

impl<F: Ring> SymmetricElement<F> {
    pub fn new(basis: SymBasis, degree: u32) -> Self {
        SymmetricElement {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn single(basis: SymBasis, lambda: Partition, c: F) -> Self {
        let mut e = Self::new(basis, lambda.weight());
        if !c.is_zero() {
            e.coeffs.insert(lambda, c);
        }
        e
    }

    pub fn insert(&mut self, lambda: Partition, c: F) {
        debug_assert_eq!(lambda.weight(), self.degree, "inhomogeneous insertion");
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
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

    pub fn coeff(&self, lambda: &Partition) -> F {
        self.coeffs.get(lambda).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.basis, rhs.basis);
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (l, c) in &rhs.coeffs {
            out.insert(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::new(self.basis, self.degree);
        for (l, v) in &self.coeffs {
            out.insert(l.clone(), v.mul(c));
        }
        out
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> SymmetricElement<G> {
        let mut out = SymmetricElement::new(self.basis, self.degree);
        for (l, v) in &self.coeffs {
            out.insert(l.clone(), f(v));
        }
        out
    }
}

/// Distinct rearrangements of the parts of `mu` padded with zeros to length n.
pub fn distinct_permutations(mu: &Partition, n: usize) -> Vec<Vec<u32>> {
    assert!(mu.length() <= n);
    let mut padded: Vec<u32> = mu.parts().to_vec();
    padded.resize(n, 0);
    // multiset recursion over remaining values
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut seen = Vec::new();
        for i in 0..remaining.len() {
            let v = remaining[i];
            if seen.contains(&v) {
                continue;
            }
            seen.push(v);
            let v = remaining.remove(i);
            current.push(v);
            rec(remaining, current, out);
            current.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut padded, &mut Vec::new(), &mut out);
    out
}

/// The monomial symmetric polynomial m_mu restricted to the given variables
/// (zero if mu has more parts than variables).
pub fn monomial_laurent<F: Ring>(mu: &Partition, vars: &VarSet) -> LaurentPolynomial<F> {
    let n = vars.len();
    if mu.length() > n {
        return LaurentPolynomial::zero(vars);
    }
    let mut out = LaurentPolynomial::zero(vars);
    for perm in distinct_permutations(mu, n) {
        let exps: Vec<i32> = perm.iter().map(|&e| e as i32).collect();
        out = out.add(&LaurentPolynomial::monomial(vars, exps, F::one()));
    }
    out
}

/// Evaluate m_mu at the given points (restriction to `points.len()` variables).
pub fn eval_monomial<F: Ring>(mu: &Partition, points: &[F]) -> F {
    if mu.length() > points.len() {
        return F::zero();
    }
    let mut acc = F::zero();
    for perm in distinct_permutations(mu, points.len()) {
        let mut t = F::one();
        for (i, &e) in perm.iter().enumerate() {
            for _ in 0..e {
                t = t.mul(&points[i]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Evaluate a monomial-basis element at the given points.
pub fn eval_element<F: Ring>(elem: &SymmetricElement<F>, points: &[F]) -> F {
    assert_eq!(elem.basis, SymBasis::MonomialA);
    let mut acc = F::zero();
    for (mu, c) in &elem.coeffs {
        acc = acc.add(&c.mul(&eval_monomial(mu, points)));
    }
    acc
}

/// Monomial-basis element as a Laurent polynomial in the given variables.
pub fn element_laurent<F: Ring>(
    elem: &SymmetricElement<F>,
    vars: &VarSet,
) -> LaurentPolynomial<F> {
    assert_eq!(elem.basis, SymBasis::MonomialA);
    let mut out = LaurentPolynomial::zero(vars);
    for (mu, c) in &elem.coeffs {
        out = out.add(&monomial_laurent::<F>(mu, vars).scale(c));
    }
    out
}

/// Transition data between the power-sum and monomial bases at one degree.
///
/// Rows of `p2m` expand p_lambda in the m basis; rows of `m2p` expand m_mu in
/// the p basis. Both are exact over Q and independent of any deformation
/// parameters, so the tables are cached globally.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub p2m: Vec<Vec<Rat>>,
    pub m2p: Vec<Vec<Rat>>,
}

fn tables_cache() -> &'static Mutex<HashMap<u32, Arc<DegreeTables>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiply a monomial-basis coefficient map by the power sum p_r.
fn multiply_by_power_sum(coeffs: &BTreeMap<Partition, Rat>, r: u32) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    let mut bump = |nu: Partition, c: Rat| {
        if c.is_zero() {
            return;
        }
        let e = out.entry(nu).or_insert_with(<Rat as Ring>::zero);
        *e += c;
    };
    for (mu, c) in coeffs {
        // append a new part r
        let mut parts = mu.parts().to_vec();
        parts.push(r);
        let nu = Partition::new(parts);
        let mult = nu.multiplicity(r) as i64;
        bump(nu, c * crate::algebra::rat_int(mult));
        // or add r to one existing part value
        let mut seen = Vec::new();
        for &u in mu.parts() {
            if seen.contains(&u) {
                continue;
            }
            seen.push(u);
            let mut parts = mu.parts().to_vec();
            let pos = parts.iter().position(|&p| p == u).unwrap();
            parts[pos] = u + r;
            let nu = Partition::new(parts);
            let mult = nu.multiplicity(u + r) as i64;
            bump(nu, c * crate::algebra::rat_int(mult));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Exact Gaussian inversion of a square rational matrix.
fn invert_rat_matrix(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        crate::algebra::rat_int(1)
                    } else {
                        <Rat as Ring>::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let d = &a[col][j] * &f;
                    a[r][j] -= d;
                    let d = &inv[col][j] * &f;
                    inv[r][j] -= d;
                }
            }
        }
    }
    inv
}

/// The (cached) degree-d transition tables.
pub fn degree_tables(d: u32) -> Arc<DegreeTables> {
    if let Some(t) = tables_cache().lock().unwrap().get(&d) {
        return t.clone();
    }
    let parts = partitions_of(d);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut p2m = Vec::with_capacity(parts.len());
    for lam in &parts {
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        acc.insert(Partition::empty(), crate::algebra::rat_int(1));
        for &r in lam.parts() {
            acc = multiply_by_power_sum(&acc, r);
        }
        let mut row = vec![Rat::from_integer(0.into()); parts.len()];
        for (mu, c) in acc {
            row[index[&mu]] = c;
        }
        p2m.push(row);
    }
    let m2p_t = invert_rat_matrix(&p2m);
    // m2p[mu][lam]: m_mu = sum_lam m2p[mu][lam] p_lam.
    // p2m has rows p_lam = sum_mu p2m[lam][mu] m_mu, i.e. (coeff vector of m in p basis)
    // solves row_m * P2M = e_mu, so m2p is the inverse transposed appropriately.
    let n = parts.len();
    let mut m2p = vec![vec![Rat::from_integer(0.into()); n]; n];
    for (mu_i, row) in m2p.iter_mut().enumerate() {
        for (lam_i, cell) in row.iter_mut().enumerate() {
            *cell = m2p_t[lam_i][mu_i].clone();
        }
    }
    let tables = Arc::new(DegreeTables {
        parts,
        index,
        p2m,
        m2p,
    });
    tables_cache()
        .lock()
        .unwrap()
        .entry(d)
        .or_insert_with(|| tables.clone());
    tables
}

/// Convert a power-sum basis element to the monomial basis.
pub fn powersum_to_monomial<F: Field + FromRat>(e: &SymmetricElement<F>) -> SymmetricElement<F> {
    assert_eq!(e.basis, SymBasis::PowerSum);
    let t = degree_tables(e.degree);
    let mut out = SymmetricElement::new(SymBasis::MonomialA, e.degree);
    for (lam, c) in &e.coeffs {
        let row = &t.p2m[t.index[lam]];
        for (j, r) in row.iter().enumerate() {
            if !num_traits::Zero::is_zero(r) {
                out.insert(t.parts[j].clone(), c.mul(&F::from_rat(r)));
            }
        }
    }
    out
}

/// Convert a monomial basis element to the power-sum basis.
pub fn monomial_to_powersum<F: Field + FromRat>(e: &SymmetricElement<F>) -> SymmetricElement<F> {
    assert_eq!(e.basis, SymBasis::MonomialA);
    let t = degree_tables(e.degree);
    let mut out = SymmetricElement::new(SymBasis::PowerSum, e.degree);
    for (mu, c) in &e.coeffs {
        let row = &t.m2p[t.index[mu]];
        for (j, r) in row.iter().enumerate() {
            if !num_traits::Zero::is_zero(r) {
                out.insert(t.parts[j].clone(), c.mul(&F::from_rat(r)));
            }
        }
    }
    out
}

/// Power-sum inner product mode: the extra factor b_k in
/// <p_lambda, p_lambda> = z_lambda prod_i b_{lambda_i}.
pub type PowerFactor<F> = Arc<dyn Fn(u32) -> F + Send + Sync>;

/// Inner product of two homogeneous elements under the deformed power-sum
/// pairing <p_lam, p_mu> = delta z_lam prod_i b(lam_i), extended bilinearly.
/// Elements of different degrees pair to zero.
pub fn inner_product<F: Field + FromRat>(
    f: &SymmetricElement<F>,
    g: &SymmetricElement<F>,
    b: &PowerFactor<F>,
) -> F {
    if f.degree != g.degree {
        return F::zero();
    }
    let fp = match f.basis {
        SymBasis::PowerSum => f.clone(),
        SymBasis::MonomialA => monomial_to_powersum(f),
    };
    let gp = match g.basis {
        SymBasis::PowerSum => g.clone(),
        SymBasis::MonomialA => monomial_to_powersum(g),
    };
    let mut acc = F::zero();
    for (lam, cf) in &fp.coeffs {
        let cg = gp.coeff(lam);
        if cg.is_zero() {
            continue;
        }
        let mut w = F::from_rat(&lam.z_factor());
        for &k in lam.parts() {
            w = w.mul(&b(k));
        }
        acc = acc.add(&cf.mul(&cg).mul(&w));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_int, RationalFunction};

    #[test]
    fn power_to_monomial_examples() {
        // p_1 -> m_(1)
        let p1: SymmetricElement<Rat> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([1]), rat_int(1));
        let m = powersum_to_monomial(&p1);
        assert_eq!(m.coeffs.len(), 1);
        assert_eq!(m.coeff(&Partition::new([1])), rat_int(1));

        // p_2 -> m_(2); p_(1,1) -> m_(2) + 2 m_(1,1)
        let p2: SymmetricElement<Rat> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([2]), rat_int(1));
        let m2 = powersum_to_monomial(&p2);
        assert_eq!(m2.coeff(&Partition::new([2])), rat_int(1));
        assert_eq!(m2.coeffs.len(), 1);

        let p11: SymmetricElement<Rat> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([1, 1]), rat_int(1));
        let m11 = powersum_to_monomial(&p11);
        assert_eq!(m11.coeff(&Partition::new([2])), rat_int(1));
        assert_eq!(m11.coeff(&Partition::new([1, 1])), rat_int(2));

        // p_(2,1) -> m_(3) + m_(2,1)
        let p21: SymmetricElement<Rat> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([2, 1]), rat_int(1));
        let m21 = powersum_to_monomial(&p21);
        assert_eq!(m21.coeff(&Partition::new([3])), rat_int(1));
        assert_eq!(m21.coeff(&Partition::new([2, 1])), rat_int(1));
        assert_eq!(m21.coeffs.len(), 2);
    }

    #[test]
    fn brute_force_power_expansion() {
        // expand p_(2,1) in 3 variables by brute force and compare
        let vars = VarSet::new(["x1", "x2", "x3"]);
        let p = |k: i32| -> LaurentPolynomial<Rat> {
            LaurentPolynomial::var_pow(&vars, "x1", k)
                .add(&LaurentPolynomial::var_pow(&vars, "x2", k))
                .add(&LaurentPolynomial::var_pow(&vars, "x3", k))
        };
        let brute = p(2).mul(&p(1));
        let p21: SymmetricElement<Rat> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([2, 1]), rat_int(1));
        let viam = element_laurent(&powersum_to_monomial(&p21), &vars);
        assert_eq!(brute, viam);
    }

    #[test]
    fn roundtrip_transitions() {
        for d in 1..=6u32 {
            for lam in partitions_of(d) {
                let e: SymmetricElement<Rat> =
                    SymmetricElement::single(SymBasis::MonomialA, lam.clone(), rat_int(1));
                let back = powersum_to_monomial(&monomial_to_powersum(&e));
                assert_eq!(back, e, "roundtrip failed at {lam}");
            }
        }
    }

    #[test]
    fn qt_inner_product_examples() {
        let eng = macdonald_formal();
        let b = eng.power_factor();
        let (_, q, t) = products::qt_params();
        let one: RationalFunction = Ring::one();
        let p1: SymmetricElement<RationalFunction> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([1]), Ring::one());
        let ip = inner_product(&p1, &p1, b);
        // <p1,p1> = (1-q)/(1-t)
        assert_eq!(ip, Field::div(&one.sub(&q), &one.sub(&t)));

        let p2: SymmetricElement<RationalFunction> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([2]), Ring::one());
        let p11: SymmetricElement<RationalFunction> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([1, 1]), Ring::one());
        assert!(inner_product(&p2, &p11, b).is_zero());
    }

    #[test]
    fn jack_inner_product_example() {
        // <p_(1,1), p_(1,1)>_jack = 2 alpha^2
        let ps = crate::algebra::ParamSet::new(["alpha"]);
        let alpha = RationalFunction::var(&ps, "alpha");
        let b: PowerFactor<RationalFunction> = {
            let a = alpha.clone();
            Arc::new(move |_k: u32| a.clone())
        };
        let p11: SymmetricElement<RationalFunction> =
            SymmetricElement::single(SymBasis::PowerSum, Partition::new([1, 1]), Ring::one());
        let ip = inner_product(&p11, &p11, &b);
        let expect = Ring::mul(
            &RationalFunction::constant(rat_int(2)),
            &Ring::mul(&alpha, &alpha),
        );
        assert_eq!(ip, expect);
    }

    #[test]
    fn distinct_permutation_counts() {
        assert_eq!(distinct_permutations(&Partition::new([1]), 2).len(), 2);
        assert_eq!(distinct_permutations(&Partition::new([1, 1]), 2).len(), 1);
        assert_eq!(distinct_permutations(&Partition::new([2, 1]), 3).len(), 6);
    }
}
