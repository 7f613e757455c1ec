//! Dual Cauchy identity: sum_lambda P_lambda(x;q,t) P_{lambda'}(y;t,q)
//! equals prod_{i,j} (1 + x_i y_j), verified as exact polynomial identities
//! over Q(q,t) truncated to a total-degree cap.

use super::engine::{macdonald_formal, macdonald_formal_swapped};
use super::distinct_permutations;
use crate::algebra::{LaurentPolynomial, RationalFunction, Ring, VarSet};
use crate::partitions::{partitions_in_rectangle, Partition};

/// Expand m_mu over a contiguous block [offset, offset+width) of `vars`.
fn monomial_in_block(
    mu: &Partition,
    vars: &VarSet,
    offset: usize,
    width: usize,
) -> LaurentPolynomial<RationalFunction> {
    if mu.length() > width {
        return LaurentPolynomial::zero(vars);
    }
    let mut out = LaurentPolynomial::zero(vars);
    for perm in distinct_permutations(mu, width) {
        let mut exps = vec![0i32; vars.len()];
        for (i, &e) in perm.iter().enumerate() {
            exps[offset + i] = e as i32;
        }
        out = out.add(&LaurentPolynomial::monomial(vars, exps, Ring::one()));
    }
    out
}

fn element_in_block(
    elem: &super::SymmetricElement<RationalFunction>,
    vars: &VarSet,
    offset: usize,
    width: usize,
) -> LaurentPolynomial<RationalFunction> {
    let mut out = LaurentPolynomial::zero(vars);
    for (mu, c) in &elem.coeffs {
        out = out.add(&monomial_in_block(mu, vars, offset, width).scale(c));
    }
    out
}

fn truncate_degree(
    p: &LaurentPolynomial<RationalFunction>,
    cap: u32,
) -> LaurentPolynomial<RationalFunction> {
    let mut out = LaurentPolynomial::zero(p.vars());
    for (e, c) in p.terms() {
        let deg: i64 = e.iter().map(|&x| x as i64).sum();
        if deg <= cap as i64 {
            out = out.add(&LaurentPolynomial::monomial(p.vars(), e.clone(), c.clone()));
        }
    }
    out
}

/// Verify the dual Cauchy identity in nx + ny variables up to total degree `cap`.
pub fn dual_cauchy_check(degree_cap: u32, nx: usize, ny: usize) -> bool {
    let names: Vec<String> = (1..=nx)
        .map(|i| format!("x{i}"))
        .chain((1..=ny).map(|j| format!("y{j}")))
        .collect();
    let vars = VarSet::new(names);

    // product side prod (1 + x_i y_j), truncated
    let mut rhs = LaurentPolynomial::one(&vars);
    for i in 0..nx {
        for j in 0..ny {
            let mut exps = vec![0i32; nx + ny];
            exps[i] = 1;
            exps[nx + j] = 1;
            let f = LaurentPolynomial::one(&vars).add(&LaurentPolynomial::monomial(
                &vars,
                exps,
                Ring::one(),
            ));
            rhs = rhs.mul(&f);
        }
    }
    rhs = truncate_degree(&rhs, degree_cap);

    // sum side over lambda contained in (ny^nx) with 2|lambda| <= cap
    let eng_qt = macdonald_formal();
    let eng_tq = macdonald_formal_swapped();
    let mut lhs = LaurentPolynomial::zero(&vars);
    for lam in partitions_in_rectangle(ny as u32, nx) {
        if 2 * lam.weight() > degree_cap {
            continue;
        }
        let px = eng_qt.polynomial(&lam);
        let py = eng_tq.polynomial(&lam.conjugate());
        let lx = element_in_block(&px.m, &vars, 0, nx);
        let ly = element_in_block(&py.m, &vars, nx, ny);
        lhs = lhs.add(&lx.mul(&ly));
    }

    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_cap_zero() {
        assert!(dual_cauchy_check(0, 1, 1));
    }

    #[test]
    fn one_by_one() {
        assert!(dual_cauchy_check(2, 1, 1));
    }

    #[test]
    fn two_by_two_low_degree() {
        assert!(dual_cauchy_check(3, 2, 2));
    }

    #[test]
    fn two_by_two_full() {
        // cap 8 covers every lambda inside (2^2), so this is the full identity
        assert!(dual_cauchy_check(8, 2, 2));
    }

    #[test]
    fn asymmetric_shapes() {
        assert!(dual_cauchy_check(6, 1, 3));
        assert!(dual_cauchy_check(6, 3, 1));
    }
}
