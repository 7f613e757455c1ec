use super::{Field, FromRat, Rat, Ring, ToF64};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational or double-precision float.
///
/// Arithmetic between two exact values stays exact; as soon as a float enters,
/// the result demotes to float. Exact values are kept in lowest terms with a
/// positive denominator by the underlying rational type.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Scalar {
    Exact(Rat),
    Float(f64),
}

impl Scalar {
    pub fn from_int(v: i64) -> Self {
        Scalar::Exact(super::rat_int(v))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Scalar::Exact(super::rat(p, q))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Absolute difference as f64, for tolerance checks across modes.
    pub fn abs_diff(&self, other: &Scalar) -> f64 {
        (self.to_f64() - other.to_f64()).abs()
    }

    fn binop(
        &self,
        rhs: &Scalar,
        exact: impl Fn(&Rat, &Rat) -> Rat,
        float: impl Fn(f64, f64) -> f64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(exact(a, b)),
            (a, b) => Scalar::Float(float(a.to_f64(), b.to_f64())),
        }
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::Exact(<Rat as Ring>::zero())
    }
    fn one() -> Self {
        Scalar::Exact(<Rat as Ring>::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => Ring::is_zero(r),
            Scalar::Float(f) => *f == 0.0,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b| a + b, |a, b| a + b)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b| a - b, |a, b| a - b)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b| a * b, |a, b| a * b)
    }
    fn neg(&self) -> Self {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl Field for Scalar {
    fn div(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b| a / b, |a, b| a / b)
    }
}

impl FromRat for Scalar {
    fn from_rat(r: &Rat) -> Self {
        Scalar::Exact(r.clone())
    }
}

impl ToF64 for Scalar {
    fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => ToF64::to_f64(r),
            Scalar::Float(f) => *f,
        }
    }
}

macro_rules! scalar_ops {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match stringify!($method) {
                    "add" => Ring::add(self, rhs),
                    "sub" => Ring::sub(self, rhs),
                    "mul" => Ring::mul(self, rhs),
                    "div" => Field::div(self, rhs),
                    _ => unreachable!(),
                }
            }
        }
    };
}

scalar_ops!(Add, add);
scalar_ops!(Sub, sub);
scalar_ops!(Mul, mul);
scalar_ops!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Ring::neg(&self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}", r),
            Scalar::Float(x) => write!(f, "{}", x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn exact_stays_exact() {
        let a = Scalar::from_ratio(1, 3);
        let b = Scalar::from_ratio(1, 6);
        assert_eq!(Ring::add(&a, &b), Scalar::from_ratio(1, 2));
        assert!(Ring::add(&a, &b).is_exact());
    }

    #[test]
    fn float_demotes() {
        let a = Scalar::from_ratio(1, 2);
        let b = Scalar::Float(0.25);
        let c = Ring::mul(&a, &b);
        assert!(!c.is_exact());
        assert!((c.to_f64() - 0.125).abs() < 1e-15);
    }

    #[test]
    fn lowest_terms() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert_eq!(r.denom(), &num_bigint::BigInt::from(2));
    }
}
