//! The greedy duel: each shot goes to whoever currently has the smaller
//! probability of having already won.
//!
//! With hit probability `p` and miss probability `q = 1 - p`, the gap between
//! Alice's and Bob's win probabilities after shots `b_0 .. b_{N-1}` (`+1` for
//! Alice, `-1` for Bob) is `p * sum_j b_j q^j`. Only the sign of that sum
//! matters to the rule, so the engine tracks the integer
//! `b^(N-1) * sum_j b_j q^j` for `q = a/b` and never reduces a fraction
//! while playing.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{pow_by_squaring, Rational, Sign};
use crate::thue_morse::{decompose_dyadic, partial_sum_sign, tm};

/// Miss probability `q` with `0 < q < 1`, and its hit probability `p = 1 - q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameParameter {
    q: Rational,
    p: Rational,
}

impl GameParameter {
    pub fn from_miss(q: Rational) -> Result<Self> {
        if !q.is_unit_interior() {
            return Err(Error::OutOfRange(q));
        }
        let p = Rational::one() - &q;
        Ok(GameParameter { q, p })
    }

    pub fn from_hit(p: Rational) -> Result<Self> {
        Self::from_miss(Rational::one() - p)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }
}

impl fmt::Display for GameParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} p={}", self.q, self.p)
    }
}

/// Greedy shot for the current difference sum. Zero (only possible before
/// the first shot, as far as anyone knows) goes to Alice and is flagged.
pub fn next_shot(diff_sum: &Rational) -> (Sign, bool) {
    shot_for(diff_sum.signum())
}

fn shot_for(diff_sign: Sign) -> (Sign, bool) {
    match diff_sign {
        Sign::Positive => (Sign::Negative, false),
        Sign::Negative => (Sign::Positive, false),
        Sign::Zero => (Sign::Positive, true),
    }
}

/// Incremental greedy player. Yields one shot per `next()` and never ends.
#[derive(Clone, Debug)]
pub struct GreedyGame {
    numer: BigInt,
    denom: BigInt,
    // a^N
    numer_pow: BigInt,
    // b^(N-1) * sum_{j<N} b_j q^j
    scaled_diff: BigInt,
    played: u64,
    tie: bool,
}

impl GreedyGame {
    pub fn new(param: &GameParameter) -> Self {
        GreedyGame {
            numer: param.q.numer().clone(),
            denom: param.q.denom().clone(),
            numer_pow: BigInt::one(),
            scaled_diff: BigInt::zero(),
            played: 0,
            tie: false,
        }
    }

    pub fn played(&self) -> u64 {
        self.played
    }

    /// Whether the difference was exactly zero before any shot after the first.
    pub fn tie_encountered(&self) -> bool {
        self.tie
    }

    pub fn diff_sign(&self) -> Sign {
        Sign::of(&self.scaled_diff)
    }

    /// `sum_{j<N} b_j q^j` over the shots played so far, reduced.
    pub fn diff_sum(&self) -> Rational {
        if self.played == 0 {
            return Rational::zero();
        }
        // The last term is ±a^(N-1), every other term carries a factor b.
        let scale = num_traits::pow(self.denom.clone(), self.played as usize - 1);
        Rational::from_coprime_parts(self.scaled_diff.clone(), scale)
    }

    pub fn into_sequence(self, shots: Vec<Sign>) -> ShotSequence {
        debug_assert_eq!(shots.len() as u64, self.played);
        ShotSequence {
            diff_sum: self.diff_sum(),
            tie_encountered: self.tie,
            shots,
        }
    }
}

impl Iterator for GreedyGame {
    type Item = Sign;

    fn next(&mut self) -> Option<Sign> {
        let (shot, tie) = shot_for(self.diff_sign());
        if tie && self.played > 0 {
            self.tie = true;
        }
        self.scaled_diff *= &self.denom;
        match shot {
            Sign::Positive => self.scaled_diff += &self.numer_pow,
            _ => self.scaled_diff -= &self.numer_pow,
        }
        self.numer_pow *= &self.numer;
        self.played += 1;
        Some(shot)
    }
}

/// A played prefix of greedy shots with its exact difference sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShotSequence {
    shots: Vec<Sign>,
    diff_sum: Rational,
    tie_encountered: bool,
}

impl ShotSequence {
    pub fn shots(&self) -> &[Sign] {
        &self.shots
    }

    pub fn len(&self) -> usize {
        self.shots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shots.is_empty()
    }

    pub fn diff_sum(&self) -> &Rational {
        &self.diff_sum
    }

    pub fn tie_encountered(&self) -> bool {
        self.tie_encountered
    }
}

pub fn greedy_sequence(param: &GameParameter, length: u64) -> ShotSequence {
    let mut game = GreedyGame::new(param);
    let shots: Vec<Sign> = game.by_ref().take(length as usize).collect();
    game.into_sequence(shots)
}

/// Probabilities that Alice and Bob have each won within `horizon` shots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinProbabilities {
    pub alice: Rational,
    pub bob: Rational,
    pub horizon: u64,
}

/// Each shot `j` ends the game with probability `p q^j`; credit it to the
/// shooter.
pub fn win_probabilities(param: &GameParameter, shots: &[Sign]) -> WinProbabilities {
    let (a, b) = (param.q.numer(), param.q.denom());
    // Per side, sum a^j b^(last-j) / b^last over its shots, `last` being the
    // side's final shot. That numerator is a^last mod b, so no gcd is needed.
    let mut alice = (BigInt::zero(), 0usize);
    let mut bob = (BigInt::zero(), 0usize);
    let mut numer_pow = BigInt::one();
    for (j, &shot) in shots.iter().enumerate() {
        let side = match shot {
            Sign::Positive => &mut alice,
            Sign::Negative => &mut bob,
            Sign::Zero => unreachable!("shots are +1 or -1"),
        };
        if !side.0.is_zero() {
            side.0 *= num_traits::pow(b.clone(), j - side.1);
        }
        side.0 += &numer_pow;
        side.1 = j;
        numer_pow *= a;
    }
    let total = |(numer, last): (BigInt, usize)| {
        if numer.is_zero() {
            return Rational::zero();
        }
        let sum = Rational::from_coprime_parts(numer, num_traits::pow(b.clone(), last));
        param.p.clone() * sum
    };
    WinProbabilities {
        alice: total(alice),
        bob: total(bob),
        horizon: shots.len() as u64,
    }
}

/// Outcome of `t_N * S_N(q) < 0` at `q`: `Ok(true)` predicts that the greedy
/// shot at `N` matches Thue-Morse given agreement before `N`.
fn sign_test_at(q: &Rational, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    match tm(n) * partial_sum_sign(n, q) {
        Sign::Negative => Ok(true),
        Sign::Positive => Ok(false),
        Sign::Zero => Err(Error::Tie { q: q.clone(), n }),
    }
}

pub fn sign_test(param: &GameParameter, n: u64) -> Result<bool> {
    sign_test_at(&param.q, n)
}

/// The sign test for `(q, m 2^r)` evaluated as the sign test for
/// `(q^(2^r), m)`.
pub fn sign_test_transferred(param: &GameParameter, n: u64) -> Result<bool> {
    let d = decompose_dyadic(n)?;
    let lifted = pow_by_squaring(&param.q, 1u64 << d.shift)?;
    sign_test_at(&lifted, d.odd).map_err(|e| match e {
        Error::Tie { .. } => Error::Tie {
            q: param.q.clone(),
            n,
        },
        other => other,
    })
}
