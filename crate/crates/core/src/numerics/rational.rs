use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Sign;
use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Parses from `a/b`, `a`, or a finite decimal such as `0.64` (read exactly
/// as `16/25`). Displays as `a/b`, or `a` when the denominator is one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Small-integer shorthand. Panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `2^-k`
    pub fn dyadic_unit(k: u32) -> Self {
        Rational(BigRational::new_raw(BigInt::one(), BigInt::one() << k))
    }

    /// Caller guarantees `denom > 0` and `gcd(numer, denom) = 1`.
    pub(crate) fn from_coprime_parts(numer: BigInt, denom: BigInt) -> Self {
        debug_assert!(denom.is_positive());
        Rational(BigRational::new_raw(numer, denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn signum(&self) -> Sign {
        Sign::of(self.numer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }

    /// Squares without a gcd pass; squares of coprime parts stay coprime.
    pub fn square(&self) -> Self {
        Rational(BigRational::new_raw(
            self.numer() * self.numer(),
            self.denom() * self.denom(),
        ))
    }

    /// True iff `0 < self < 1`.
    pub fn is_unit_interior(&self) -> bool {
        self.is_positive() && self.numer() < self.denom()
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Renders the value rounded (half away from zero) to `sig` significant
    /// decimal digits, in fixed-point notation with trailing zeros kept.
    pub fn to_decimal(&self, sig: u32) -> String {
        assert!(sig >= 1, "at least one significant digit");
        if self.is_zero() {
            return "0".to_owned();
        }
        let neg = self.0.is_negative();
        let value = self.0.abs();
        let ten = BigInt::from(10u8);

        // Decimal exponent e with 10^e <= value < 10^(e + 1).
        let mut exp = value.numer().to_str_radix(10).len() as i64
            - value.denom().to_str_radix(10).len() as i64;
        let pow10 = |e: i64| -> BigRational {
            let p = num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
            if e >= 0 {
                BigRational::from_integer(p)
            } else {
                BigRational::new_raw(BigInt::one(), p)
            }
        };
        while value >= pow10(exp + 1) {
            exp += 1;
        }
        while value < pow10(exp) {
            exp -= 1;
        }

        let shift = sig as i64 - 1 - exp;
        let scaled = &value * pow10(shift);
        let (quot, rem) = scaled.numer().div_rem(scaled.denom());
        let mut digits = quot;
        if rem * 2u8 >= *scaled.denom() {
            digits += 1u8;
        }
        if digits == num_traits::pow(ten.clone(), sig as usize) {
            digits /= 10u8;
            exp += 1;
        }
        let digits = digits.to_str_radix(10);
        debug_assert_eq!(digits.len(), sig as usize);

        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if int_len >= digits.len() {
                out.push_str(&digits);
                out.extend(std::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
            out.push_str(&digits);
        }
        out
    }
}

/// `x^e` by repeated squaring. `0^0 = 1`; exponents above `2^63 - 1` are
/// rejected.
pub fn pow_by_squaring(x: &Rational, e: u64) -> Result<Rational> {
    if e > i64::MAX as u64 {
        return Err(Error::ExponentTooLarge(e));
    }
    let mut base = (x.numer().clone(), x.denom().clone());
    let mut acc = (BigInt::one(), BigInt::one());
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc.0 * &base.0, &acc.1 * &base.1);
        }
        e >>= 1;
        if e > 0 {
            base = (&base.0 * &base.0, &base.1 * &base.1);
        }
    }
    Ok(Rational::from_coprime_parts(acc.0, acc.1))
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_owned());
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = parse_integer(n.trim()).ok_or_else(bad)?;
            let d: BigInt = parse_integer(d.trim()).ok_or_else(bad)?;
            return Rational::new(n, d);
        }
        if let Some((int, frac)) = t.split_once('.') {
            let (neg, int) = match int.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int.strip_prefix('+').unwrap_or(int)),
            };
            if int.is_empty() && frac.is_empty() {
                return Err(bad());
            }
            let all_digits = |p: &str| p.bytes().all(|c| c.is_ascii_digit());
            if !all_digits(int) || !all_digits(frac) {
                return Err(bad());
            }
            let joined = format!("{int}{frac}");
            let mut numer: BigInt = joined.parse().map_err(|_| bad())?;
            if neg {
                numer = -numer;
            }
            let denom = num_traits::pow(BigInt::from(10u8), frac.len());
            return Rational::new(numer, denom);
        }
        parse_integer(t).map(Rational::integer).ok_or_else(bad)
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<Rational> for BigRational {
    fn from(r: Rational) -> Self {
        r.0
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.denom().is_one() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

// Lowest-terms product and sum of reduced operands. `Ratio`'s own operators
// finish with a full gcd pass, which dominates on long exact sums.
fn mul_reduced(x: &BigRational, y: &BigRational) -> BigRational {
    if x.is_zero() || y.is_zero() {
        return BigRational::zero();
    }
    let g1 = x.numer().gcd(y.denom());
    let g2 = y.numer().gcd(x.denom());
    BigRational::new_raw(
        (x.numer() / &g1) * (y.numer() / &g2),
        (x.denom() / &g2) * (y.denom() / &g1),
    )
}

fn add_reduced(x: &BigRational, y: &BigRational) -> BigRational {
    let g = x.denom().gcd(y.denom());
    if g.is_one() {
        return BigRational::new_raw(
            x.numer() * y.denom() + y.numer() * x.denom(),
            x.denom() * y.denom(),
        );
    }
    let t = x.numer() * (y.denom() / &g) + y.numer() * (x.denom() / &g);
    if t.is_zero() {
        return BigRational::zero();
    }
    let g2 = t.gcd(&g);
    BigRational::new_raw(t / &g2, (x.denom() / &g) * (y.denom() / g2))
}

impl Add<&Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(add_reduced(&self.0, &rhs.0))
    }
}

impl Sub<&Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(add_reduced(&self.0, &-&rhs.0))
    }
}

impl Mul<&Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(mul_reduced(&self.0, &rhs.0))
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero.
    fn div(self, rhs: &Rational) -> Rational {
        let inv = rhs.recip().expect("division by zero");
        Rational(mul_reduced(&self.0, &inv.0))
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}
