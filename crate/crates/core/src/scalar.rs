//! Exact rational scalars and the [`Ring`] abstraction shared by every
//! coefficient type in the crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedDiv, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n / d`; panics on `d == 0`, so only use with literal denominators.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    Scalar::from_str(t).map_err(|_| Error::Parse(s.to_string()))
}

/// `"p/q"`, or `"p"` when the denominator is one. Sign sits on the numerator.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl fmt::Display for ArithOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            ArithOp::Add => '+',
            ArithOp::Sub => '-',
            ArithOp::Mul => '*',
            ArithOp::Div => '/',
        };
        write!(f, "{c}")
    }
}

pub fn scalar_arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => return checked_div(x, y),
    })
}

pub fn checked_div(x: &Scalar, y: &Scalar) -> Result<Scalar> {
    x.checked_div(y).ok_or(Error::DivisionByZero)
}

/// Commutative ring containing the rationals.
///
/// Binary forms are generic over this so the same transvectant code runs on
/// concrete numbers and on symbolic polynomial coefficients.
pub trait Ring: Clone + PartialEq + fmt::Debug + Zero + One {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplication by a rational constant.
    fn scaled(&self, k: &Scalar) -> Self;

    fn from_scalar(k: &Scalar) -> Self {
        Self::one().scaled(k)
    }
}

impl Ring for Scalar {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &Scalar) -> Self {
        self * k
    }
    fn from_scalar(k: &Scalar) -> Self {
        k.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let sum = scalar_arith(&ratio(1, 2), &ratio(1, 3), ArithOp::Add).unwrap();
        assert_eq!(sum, ratio(5, 6));
        let prod = scalar_arith(&int(7), &int(0), ArithOp::Mul).unwrap();
        assert!(Zero::is_zero(&prod));
        let q = scalar_arith(&ratio(5, 36), &ratio(1, 72), ArithOp::Div).unwrap();
        assert_eq!(q, int(10));
        assert_eq!(&q * ratio(1, 72), ratio(5, 36));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            scalar_arith(&int(1), &int(0), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("-37/36").unwrap(), ratio(-37, 36));
        assert_eq!(parse_scalar(" 4/2 ").unwrap(), int(2));
        assert_eq!(format_scalar(&ratio(10, -4)), "-5/2");
        assert_eq!(format_scalar(&int(7)), "7");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("").is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..100).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a * &b, &b * &a);
            if !Zero::is_zero(&b) {
                prop_assert_eq!(checked_div(&(&a * &b), &b).unwrap(), a.clone());
            }
        }

        #[test]
        fn format_round_trips(a in arb_scalar()) {
            prop_assert_eq!(parse_scalar(&format_scalar(&a)).unwrap(), a);
        }
    }
}
