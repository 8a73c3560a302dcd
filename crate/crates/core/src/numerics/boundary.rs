use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, Sign};

/// The two polynomials whose positive roots delimit the agreement-length
/// intervals: `1 - X - X^2` (root `(sqrt 5 - 1) / 2 ~ 0.618`) and
/// `1 - X - X^2 + X^3 - X^4` (root ~ 0.661).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryPolynomial {
    Quadratic,
    Quartic,
}

impl BoundaryPolynomial {
    /// Coefficients by ascending degree.
    pub fn coefficients(self) -> &'static [i8] {
        match self {
            BoundaryPolynomial::Quadratic => &[1, -1, -1],
            BoundaryPolynomial::Quartic => &[1, -1, -1, 1, -1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryPolynomial::Quadratic => "alpha",
            BoundaryPolynomial::Quartic => "beta",
        }
    }
}

/// Exact sign of `poly(x)`.
///
/// For `x` in `(0, 1)` a positive sign means `x` lies below the polynomial's
/// unique root in that interval.
pub fn sign_of_boundary(poly: BoundaryPolynomial, x: &Rational) -> Sign {
    sign_of_boundary_scaled(poly, x.numer(), x.denom())
}

/// Sign of `poly(numer / denom)` for `denom > 0`, evaluated as the
/// homogenised integer form `sum c_i numer^i denom^(d - i)`.
fn sign_of_boundary_scaled(
    poly: BoundaryPolynomial,
    numer: &BigInt,
    denom: &BigInt,
) -> Sign {
    let coeffs = poly.coefficients();
    // Horner on the homogenised form, highest degree first.
    let mut acc = BigInt::zero();
    let mut denom_pow = BigInt::one();
    for &c in coeffs.iter().rev() {
        acc = acc * numer + BigInt::from(c) * &denom_pow;
        denom_pow *= denom;
    }
    Sign::of(&acc)
}

/// Brackets the root of `poly` in `(0, 1)` by bisection from `[0, 1]`.
///
/// After `bits` halvings the bracket `(lo, hi)` has width `2^-bits`, with
/// `poly(lo) > 0 > poly(hi)`.
pub fn approx_boundary(poly: BoundaryPolynomial, bits: u32) -> (Rational, Rational) {
    // Endpoints kept as lo_num / 2^k and (lo_num + 1) / 2^k.
    let mut lo_num = BigInt::zero();
    for k in 1..=bits {
        lo_num <<= 1;
        let mid = &lo_num + 1u8;
        let scale = BigInt::one() << k;
        match sign_of_boundary_scaled(poly, &mid, &scale) {
            Sign::Positive => lo_num = mid,
            Sign::Negative => {}
            // Neither polynomial has a rational root.
            Sign::Zero => unreachable!("{poly:?} vanished at a dyadic rational"),
        }
    }
    let scale = BigInt::one() << bits;
    let hi_num = &lo_num + 1u8;
    (
        Rational::new(lo_num, scale.clone()).expect("positive scale"),
        Rational::new(hi_num, scale).expect("positive scale"),
    )
}
