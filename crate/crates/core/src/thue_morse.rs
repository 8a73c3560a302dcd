//! The ±1 Thue-Morse sequence `t_n = (-1)^(popcount n)` and its weighted
//! partial sums `S_n(q) = sum_{j < n} t_j q^j`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numerics::{pow_by_squaring, Rational, Sign};

/// `n = odd * 2^shift`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DyadicDecomposition {
    pub odd: u64,
    pub shift: u32,
}

impl DyadicDecomposition {
    pub fn value(self) -> u64 {
        self.odd << self.shift
    }
}

pub fn digit_sum_base2(n: u64) -> u32 {
    n.count_ones()
}

/// `t_n`; never `Sign::Zero`.
pub fn tm(n: u64) -> Sign {
    if digit_sum_base2(n) % 2 == 0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub fn tm_prefix(length: usize) -> Vec<Sign> {
    (0..length as u64).map(tm).collect()
}

pub fn decompose_dyadic(n: u64) -> Result<DyadicDecomposition> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let shift = n.trailing_zeros();
    Ok(DyadicDecomposition {
        odd: n >> shift,
        shift,
    })
}

/// Numerator of `S_n(a/b) * b^(n-1)`, i.e. `sum_{j<n} t_j a^j b^(n-1-j)`.
/// Its sign is the sign of `S_n` because `b > 0`. For coprime `a`, `b` it is
/// `±a^(n-1)` mod `b`, hence already coprime to `b^(n-1)`.
pub(crate) fn scaled_partial_sum(n: u64, numer: &BigInt, denom: &BigInt) -> BigInt {
    let mut acc = BigInt::ZERO;
    let mut numer_pow = BigInt::one();
    for j in 0..n {
        acc *= denom;
        match tm(j) {
            Sign::Positive => acc += &numer_pow,
            _ => acc -= &numer_pow,
        }
        numer_pow *= numer;
    }
    acc
}

/// Exact sign of `S_n(q)` without forming the reduced rational.
pub fn partial_sum_sign(n: u64, q: &Rational) -> Sign {
    Sign::of(&scaled_partial_sum(n, q.numer(), q.denom()))
}

/// `S_n(q)` by term-by-term summation.
pub fn partial_sum_direct(n: u64, q: &Rational) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let numer = scaled_partial_sum(n, q.numer(), q.denom());
    let denom = num_traits::pow(q.denom().clone(), (n - 1) as usize);
    Rational::from_coprime_parts(numer, denom)
}

/// `S_{2^r}(q) = prod_{j<r} (1 - q^(2^j))`.
pub fn power_of_two_product(shift: u32, q: &Rational) -> Rational {
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    let mut a = q.numer().clone();
    let mut b = q.denom().clone();
    for _ in 0..shift {
        // (1 - a/b) contributes (b - a) / b.
        numer *= &b - &a;
        denom *= &b;
        a = &a * &a;
        b = &b * &b;
    }
    // gcd(b - a, b) = gcd(a, b) = 1 at every step.
    Rational::from_coprime_parts(numer, denom)
}

/// `S_n(q)` via `n = m 2^r`: `S_{2^r}(q) * S_m(q^(2^r))`, the first factor
/// from the product formula and the second summed directly.
pub fn partial_sum_factored(n: u64, q: &Rational) -> Result<Rational> {
    let DyadicDecomposition { odd, shift } = decompose_dyadic(n)?;
    let outer = power_of_two_product(shift, q);
    let inner = partial_sum_direct(odd, &pow_by_squaring(q, 1u64 << shift)?);
    Ok(outer * inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TABLE: [i8; 19] = [1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1];

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn digit_sums() {
        assert_eq!(digit_sum_base2(0), 0);
        assert_eq!(digit_sum_base2(5), 2);
        assert_eq!(digit_sum_base2(7), 3);
    }

    #[test]
    fn matches_published_table() {
        assert_eq!(tm(0), Sign::Positive);
        assert_eq!((tm(3), tm(5), tm(7)), (Sign::Positive, Sign::Positive, Sign::Negative));
        assert_eq!(tm(18), Sign::Positive);
        assert!(tm_prefix(0).is_empty());
        let seven: Vec<i8> = tm_prefix(7).into_iter().map(Sign::as_i8).collect();
        assert_eq!(seven, [1, -1, -1, 1, -1, 1, 1]);
        let row: Vec<i8> = tm_prefix(19).into_iter().map(Sign::as_i8).collect();
        assert_eq!(row, TABLE);
    }

    #[test]
    fn dyadic_decomposition() {
        let d = |odd, shift| DyadicDecomposition { odd, shift };
        assert_eq!(decompose_dyadic(12).unwrap(), d(3, 2));
        assert_eq!(decompose_dyadic(1).unwrap(), d(1, 0));
        assert_eq!(decompose_dyadic(40).unwrap(), d(5, 3));
        assert_eq!(decompose_dyadic(0), Err(Error::ZeroIndex));
        assert_eq!(decompose_dyadic(1 << 63).unwrap(), d(1, 63));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(partial_sum_direct(0, &q(1, 2)), Rational::zero());
        assert_eq!(partial_sum_direct(1, &q(5, 7)), Rational::one());
        assert_eq!(partial_sum_direct(3, &q(1, 2)), q(1, 4));
        // (81 - 54 - 36 + 24 - 16) / 81
        assert_eq!(partial_sum_direct(5, &q(2, 3)), q(-1, 81));
    }

    #[test]
    fn factored_sum_examples() {
        for x in [q(1, 3), q(2, 3), q(9, 10)] {
            let one = Rational::one();
            let expected = (&one - &x) * (&one - &x) * (&one + &x);
            assert_eq!(partial_sum_factored(4, &x).unwrap(), expected);
            assert_eq!(partial_sum_factored(1, &x).unwrap(), one);
        }
        assert_eq!(partial_sum_direct(2, &q(2, 3)), q(1, 3));
        assert_eq!(partial_sum_direct(3, &q(4, 9)), q(29, 81));
        assert_eq!(partial_sum_factored(6, &q(2, 3)).unwrap(), q(29, 243));
        assert_eq!(partial_sum_direct(6, &q(2, 3)), q(29, 243));
        assert_eq!(partial_sum_factored(0, &q(1, 2)), Err(Error::ZeroIndex));
    }

    #[test]
    fn recurrence_up_to_two_to_the_sixteen() {
        for n in 0..=(1u64 << 16) {
            assert_eq!(tm(2 * n), tm(n));
            assert_eq!(tm(2 * n + 1), -tm(n));
        }
    }

    #[test]
    fn multiplicative_over_bit_blocks() {
        for r in 0..=6u32 {
            for a in 0..64u64 {
                for b in 0..(1u64 << r) {
                    assert_eq!(tm((a << r) + b), tm(a) * tm(b));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn factorization_identity(m in (0u64..32).prop_map(|k| 2 * k + 1), r in 0u32..=6,
                                  num in 1i64..40, extra in 1i64..40) {
            let x = q(num, num + extra);
            let n = m << r;
            prop_assert_eq!(partial_sum_factored(n, &x).unwrap(), partial_sum_direct(n, &x));
        }

        #[test]
        fn product_formula_is_positive(r in 0u32..=10, num in 1i64..1000, extra in 1i64..1000) {
            let x = q(num, num + extra);
            let prod = power_of_two_product(r, &x);
            prop_assert!(prod.is_positive());
            prop_assert_eq!(prod, partial_sum_direct(1 << r, &x));
        }

        #[test]
        fn prefix_consistency(len in 0usize..2000) {
            let prefix = tm_prefix(len);
            for (i, s) in prefix.iter().enumerate() {
                prop_assert_eq!(*s, tm(i as u64));
            }
        }

        #[test]
        fn sign_helper_agrees_with_reduced_sum(n in 0u64..200, num in -50i64..50, d in 1i64..50) {
            let x = q(num, d);
            prop_assert_eq!(partial_sum_sign(n, &x), partial_sum_direct(n, &x).signum());
        }
    }
}
