//! Exact integers and rationals, plus the partial arithmetic of the
//! one-point compactification `R ∪ {∞}` used to evaluate continued fractions
//! whose partial quotients may vanish.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

pub use num_bigint::{BigInt as Integer, BigUint as Natural};
pub use num_rational::BigRational as Rational;

/// A value of `R ∪ {∞}` restricted to rationals, with an absorbing
/// `Undefined` for the operations the partial arithmetic leaves undefined.
///
/// There is a single unsigned point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinity,
    Undefined,
}

impl ExtendedRational {
    pub fn zero() -> Self {
        ExtendedRational::Finite(Rational::zero())
    }

    pub fn integer(value: impl Into<Integer>) -> Self {
        ExtendedRational::Finite(Rational::from_integer(value.into()))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, ExtendedRational::Undefined)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// `1/x` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        match self {
            ExtendedRational::Finite(r) if r.is_zero() => ExtendedRational::Infinity,
            ExtendedRational::Finite(r) => ExtendedRational::Finite(r.recip()),
            ExtendedRational::Infinity => ExtendedRational::zero(),
            ExtendedRational::Undefined => ExtendedRational::Undefined,
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        ExtendedRational::Finite(r)
    }
}

impl Add for &ExtendedRational {
    type Output = ExtendedRational;

    fn add(self, rhs: &ExtendedRational) -> ExtendedRational {
        use ExtendedRational::*;
        match (self, rhs) {
            (Finite(x), Finite(y)) => Finite(x + y),
            (Finite(_), Infinity) | (Infinity, Finite(_)) => Infinity,
            _ => Undefined,
        }
    }
}

impl Add for ExtendedRational {
    type Output = ExtendedRational;

    fn add(self, rhs: ExtendedRational) -> ExtendedRational {
        &self + &rhs
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => write!(f, "{r}"),
            ExtendedRational::Infinity => f.write_str("inf"),
            ExtendedRational::Undefined => f.write_str("undefined"),
        }
    }
}

pub fn ext_add(x: &ExtendedRational, y: &ExtendedRational) -> ExtendedRational {
    x + y
}

pub fn ext_inv(x: &ExtendedRational) -> ExtendedRational {
    x.recip()
}

pub fn rat_cmp(x: &Rational, y: &Rational) -> Ordering {
    x.cmp(y)
}

/// True when `r` is stored in lowest terms with a positive denominator.
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

/// `p/q` as a reduced rational. Panics if `q == 0`.
pub fn ratio(p: impl Into<Integer>, q: impl Into<Integer>) -> Rational {
    Rational::new(p.into(), q.into())
}

/// True for `0 <= r < 1`.
pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && r.numer() < r.denom()
}
