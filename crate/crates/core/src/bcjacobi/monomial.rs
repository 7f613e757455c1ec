//! Hyperoctahedral orbit monomials m^BC_mu and linear combinations of them.

use crate::algebra::{Field, LaurentPolynomial, Ring, ToF64, VarSet};
use crate::partitions::Partition;
use num_complex::Complex64;
use std::collections::BTreeMap;

/// Linear combination of BC orbit monomials, keyed by partitions. BC elements
/// are not weight-graded (dominance mixes weights), so no degree is carried.
pub type BcElement<F> = BTreeMap<Partition, F>;

/// The W-orbit of mu padded to n entries: all distinct signed permutations.
pub fn bc_orbit(mu: &Partition, n: usize) -> Vec<Vec<i32>> {
    assert!(mu.length() <= n, "partition longer than variable count");
    let mut out = Vec::new();
    for perm in crate::symfun::distinct_permutations(mu, n) {
        let nonzero: Vec<usize> = (0..n).filter(|&i| perm[i] != 0).collect();
        for mask in 0..(1u32 << nonzero.len()) {
            let mut v: Vec<i32> = perm.iter().map(|&e| e as i32).collect();
            for (bit, &pos) in nonzero.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    v[pos] = -v[pos];
                }
            }
            out.push(v);
        }
    }
    out
}

/// The orbit monomial m^BC_mu as a Laurent polynomial in n variables.
pub fn bc_monomial<F: Ring>(mu: &Partition, vars: &VarSet) -> LaurentPolynomial<F> {
    let mut out = LaurentPolynomial::zero(vars);
    for v in bc_orbit(mu, vars.len()) {
        out = out.add(&LaurentPolynomial::monomial(vars, v, F::one()));
    }
    out
}

/// Expand a BC element into a Laurent polynomial.
pub fn bc_element_laurent<F: Ring>(
    elem: &BcElement<F>,
    vars: &VarSet,
) -> LaurentPolynomial<F> {
    let mut out = LaurentPolynomial::zero(vars);
    for (mu, c) in elem {
        out = out.add(&bc_monomial::<F>(mu, vars).scale(c));
    }
    out
}

/// Evaluate a BC element at field points (nonzero for negative exponents).
pub fn bc_eval<F: Field>(elem: &BcElement<F>, points: &[F]) -> F {
    let mut acc = F::zero();
    for (mu, c) in elem {
        let mut orbit_sum = F::zero();
        for v in bc_orbit(mu, points.len()) {
            let mut t = F::one();
            for (i, &e) in v.iter().enumerate() {
                let base = if e >= 0 {
                    points[i].clone()
                } else {
                    points[i].inv()
                };
                for _ in 0..e.unsigned_abs() {
                    t = t.mul(&base);
                }
            }
            orbit_sum = orbit_sum.add(&t);
        }
        acc = acc.add(&c.mul(&orbit_sum));
    }
    acc
}

/// Evaluate a BC element at complex torus points.
pub fn bc_eval_complex<F: Ring + ToF64>(elem: &BcElement<F>, points: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (mu, c) in elem {
        let mut orbit_sum = Complex64::new(0.0, 0.0);
        for v in bc_orbit(mu, points.len()) {
            let mut t = Complex64::new(1.0, 0.0);
            for (i, &e) in v.iter().enumerate() {
                t *= points[i].powi(e);
            }
            orbit_sum += t;
        }
        acc += orbit_sum * c.to_f64();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_int, Rat};

    #[test]
    fn single_variable_orbit() {
        // mu = (1), n = 1: x + 1/x
        let vars = VarSet::z_vars(1);
        let m: LaurentPolynomial<Rat> = bc_monomial(&Partition::new([1]), &vars);
        let expect = LaurentPolynomial::var_pow(&vars, "z", 1)
            .add(&LaurentPolynomial::var_pow(&vars, "z", -1));
        assert_eq!(m, expect);
    }

    #[test]
    fn two_variable_orbits() {
        let vars = VarSet::z_vars(2);
        // mu = (1): x1 + 1/x1 + x2 + 1/x2
        let m1: LaurentPolynomial<Rat> = bc_monomial(&Partition::new([1]), &vars);
        assert_eq!(m1.num_terms(), 4);
        assert_eq!(m1.coeff(&[1, 0]), rat_int(1));
        assert_eq!(m1.coeff(&[-1, 0]), rat_int(1));
        // mu = (1,1): x1 x2 + x1/x2 + x2/x1 + 1/(x1 x2)
        let m11: LaurentPolynomial<Rat> = bc_monomial(&Partition::new([1, 1]), &vars);
        assert_eq!(m11.num_terms(), 4);
        assert_eq!(m11.coeff(&[1, 1]), rat_int(1));
        assert_eq!(m11.coeff(&[-1, 1]), rat_int(1));
    }

    #[test]
    fn orbit_size_divides_group_order() {
        for n in 1..=3usize {
            let group = 2u64.pow(n as u32) * (1..=n as u64).product::<u64>();
            for mu in crate::partitions::partitions_in_rectangle(3, n) {
                let size = bc_orbit(&mu, n).len() as u64;
                assert_eq!(group % size, 0, "mu={mu} n={n}");
            }
        }
    }

    #[test]
    fn hyperoctahedral_invariance() {
        // invariant under inversion of all variables and permutation (checked
        // via sorted term multiset equality after the swap)
        let vars = VarSet::z_vars(2);
        let m: LaurentPolynomial<Rat> = bc_monomial(&Partition::new([2, 1]), &vars);
        assert_eq!(m, m.invert_vars());
    }
}
