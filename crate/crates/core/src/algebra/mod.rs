//! Exact and numeric scalar/polynomial arithmetic underlying every other module.
//!
//! The coefficient tower is:
//! - [`Rat`]: arbitrary-precision rationals, always in lowest terms
//! - [`Scalar`]: either an exact rational or an f64 (mixing demotes to f64)
//! - [`MultiPoly`]: multivariate polynomials over [`Rat`] in a named parameter set
//! - [`RationalFunction`]: reduced fractions of [`MultiPoly`] (the fields Q(q,t), Q(alpha), ...)
//! - [`LaurentPolynomial`]: integer-exponent polynomials over any [`Ring`] coefficient

mod scalar;
mod multipoly;
mod ratfun;
mod laurent;

pub use scalar::Scalar;
pub use multipoly::{MultiPoly, ParamSet};
pub use ratfun::RationalFunction;
pub use laurent::{LaurentPolynomial, VarSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, the exact coefficient domain.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Shorthand for the fraction p/q as a [`Rat`].
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("variable-set mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("division by zero at evaluation point")]
    DivisionByZero,
    #[error("unassigned variable `{0}` in evaluation")]
    UnassignedVariable(String),
    #[error("zero value assigned to variable `{0}` with negative exponent")]
    ZeroWithNegativeExponent(String),
    #[error("inexact division")]
    InexactDivision,
}

/// Commutative ring operations, method form so generic engines stay readable.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// Rings with division, used by the Gram-Schmidt engines.
pub trait Field: Ring {
    fn div(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self {
        Self::one().div(self)
    }
}

/// Embedding of the rationals, used to transport exact transition matrices.
pub trait FromRat: Ring {
    fn from_rat(r: &Rat) -> Self;
    fn from_int(v: i64) -> Self {
        Self::from_rat(&rat_int(v))
    }
}

/// Lossy numeric view, used by quadrature and reporting.
pub trait ToF64 {
    fn to_f64(&self) -> f64;
}

/// Gaussian elimination over an exact field (first nonzero pivot); also used
/// for the small well-conditioned f64 Gram systems of the numeric engines.
pub fn solve_linear<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Vec<F> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular linear system");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inv();
        for j in col..n {
            a[col][j] = a[col][j].mul(&inv);
        }
        b[col] = b[col].mul(&inv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    let d = a[col][j].mul(&f);
                    a[r][j] = a[r][j].sub(&d);
                }
                let d = b[col].mul(&f);
                b[r] = b[r].sub(&d);
            }
        }
    }
    b
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Rat {
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl FromRat for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

impl ToF64 for Rat {
    fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // fall back on a quotient of lossy conversions for huge numerators
            let n = ToPrimitive::to_f64(self.numer()).unwrap_or(f64::NAN);
            let d = ToPrimitive::to_f64(self.denom()).unwrap_or(f64::NAN);
            n / d
        })
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for f64 {
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl FromRat for f64 {
    fn from_rat(r: &Rat) -> Self {
        ToF64::to_f64(r)
    }
}

impl ToF64 for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}
