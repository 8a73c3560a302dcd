//! Exact arithmetic: rationals, three-valued signs, and the two boundary
//! polynomials whose positive roots split the parameter range.

mod boundary;
mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::Signed;

pub use boundary::{approx_boundary, sign_of_boundary, BoundaryPolynomial};
pub use rational::{pow_by_squaring, Rational};

/// Sign of an exact quantity. Also encodes a shot: `Positive` is Alice,
/// `Negative` is Bob.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative = -1,
    Zero = 0,
    Positive = 1,
}

impl Sign {
    pub fn of(n: &BigInt) -> Sign {
        if n.is_positive() {
            Sign::Positive
        } else if n.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn from_ordering(ord: Ordering) -> Sign {
        match ord {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        self as i8
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-1",
            Sign::Zero => "0",
            Sign::Positive => "+1",
        })
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_algebra() {
        use Sign::*;
        assert_eq!(Positive * Negative, Negative);
        assert_eq!(Negative * Negative, Positive);
        assert_eq!(Zero * Negative, Zero);
        assert_eq!(-Positive, Negative);
        assert_eq!(Sign::from_ordering(Ordering::Less), Negative);
        assert_eq!(Negative.as_i8(), -1);
    }
}
