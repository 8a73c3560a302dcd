//! Agreement length `L_q` between the greedy shot order and Thue-Morse,
//! computed by simulation and by exact interval classification.
//!
//! Writing `alpha ~ 0.618` and `beta ~ 0.661` for the roots of the two
//! boundary polynomials, the classification is:
//!
//! | `q`                                          | `L_q`         |
//! |----------------------------------------------|---------------|
//! | `q < alpha`                                  | `3`           |
//! | `alpha^(2^-n) < q < beta^(2^-n)`             | `5 * 2^n`     |
//! | `beta^(2^-n) < q < alpha^(2^-(n+1))`         | `3 * 2^(n+1)` |
//!
//! Membership is decided by boundary-polynomial signs at `q^(2^n)`, so the
//! irrational endpoints are never formed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::game::{GameParameter, GreedyGame};
use crate::numerics::{sign_of_boundary, BoundaryPolynomial, Rational, Sign};
use crate::thue_morse::tm;

pub const DEFAULT_SIM_CAP: u64 = 1 << 14;
pub const DEFAULT_N_CAP: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalClass {
    /// `q < alpha`
    SmallQ,
    /// `alpha < q^(2^n) < beta`
    BranchFive(u32),
    /// `beta < q^(2^n) < sqrt(alpha)`
    BranchThree(u32),
}

impl IntervalClass {
    pub fn agreement_length(self) -> u64 {
        match self {
            IntervalClass::SmallQ => 3,
            IntervalClass::BranchFive(n) => 5 << n,
            IntervalClass::BranchThree(n) => 3 << (n + 1),
        }
    }

    /// Position in the increasing order of the intervals along `(0, 1)`.
    pub fn rank(self) -> u64 {
        match self {
            IntervalClass::SmallQ => 0,
            IntervalClass::BranchFive(n) => 2 * n as u64 + 1,
            IntervalClass::BranchThree(n) => 2 * n as u64 + 2,
        }
    }
}

impl fmt::Display for IntervalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalClass::SmallQ => f.write_str("small"),
            IntervalClass::BranchFive(n) => write!(f, "five:{n}"),
            IntervalClass::BranchThree(n) => write!(f, "three:{n}"),
        }
    }
}

impl FromStr for IntervalClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_owned());
        if s == "small" {
            return Ok(IntervalClass::SmallQ);
        }
        let (kind, n) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = n.parse().map_err(|_| bad())?;
        match kind {
            "five" => Ok(IntervalClass::BranchFive(n)),
            "three" => Ok(IntervalClass::BranchThree(n)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Simulated,
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementResult {
    pub length: u64,
    pub method: Method,
    /// First index where the greedy shot differs from Thue-Morse.
    pub witness_index: Option<u64>,
    pub tie_flag: bool,
}

/// Plays the greedy game against Thue-Morse until the first disagreement.
pub fn agreement_length_simulated(param: &GameParameter, cap: u64) -> Result<AgreementResult> {
    let mut game = GreedyGame::new(param);
    for i in 0..cap {
        let shot = game.next().expect("greedy game is endless");
        if shot != tm(i) {
            return Ok(AgreementResult {
                length: i,
                method: Method::Simulated,
                witness_index: Some(i),
                tie_flag: game.tie_encountered(),
            });
        }
    }
    Err(Error::CapExceeded { cap })
}

fn exact_sign(poly: BoundaryPolynomial, x: &Rational) -> Result<Sign> {
    match sign_of_boundary(poly, x) {
        Sign::Zero => Err(Error::ZeroSign(x.clone())),
        s => Ok(s),
    }
}

/// Locates `q` among the agreement-length intervals.
pub fn classify(q: &Rational, n_cap: u32) -> Result<IntervalClass> {
    use BoundaryPolynomial::{Quadratic, Quartic};

    if !q.is_unit_interior() {
        return Err(Error::OutOfRange(q.clone()));
    }
    if exact_sign(Quadratic, q)? == Sign::Positive {
        return Ok(IntervalClass::SmallQ);
    }
    // Square until x lands in (alpha, sqrt(alpha)), i.e. until x^2 < alpha.
    let mut x = q.clone();
    let mut n = 0u32;
    loop {
        let sq = x.square();
        if exact_sign(Quadratic, &sq)? == Sign::Positive {
            break;
        }
        if n >= n_cap {
            return Err(Error::NCapExceeded { n_cap });
        }
        x = sq;
        n += 1;
    }
    Ok(match exact_sign(Quartic, &x)? {
        Sign::Positive => IntervalClass::BranchFive(n),
        _ => IntervalClass::BranchThree(n),
    })
}

pub fn agreement_length_closed_form(q: &Rational, n_cap: u32) -> Result<AgreementResult> {
    let class = classify(q, n_cap)?;
    Ok(AgreementResult {
        length: class.agreement_length(),
        method: Method::ClosedForm,
        witness_index: None,
        tie_flag: false,
    })
}

/// Evidence for `L_q = 3 * 2^(k-1)` at `q = 1 - 2^-k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub k: u32,
    pub q: Rational,
    pub expected: u64,
    pub closed: u64,
    /// `None` when the expected length does not fit under the simulation cap.
    pub simulated: Option<u64>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.closed == self.expected && self.simulated.is_none_or(|s| s == self.expected)
    }
}

pub fn corollary_report(k: u32, sim_cap: u64, n_cap: u32) -> Result<CorollaryReport> {
    assert!((1..=62).contains(&k), "k must lie in 1..=62");
    let q = Rational::one() - Rational::dyadic_unit(k);
    let expected = 3u64 << (k - 1);
    let closed = agreement_length_closed_form(&q, n_cap)?.length;
    let simulated = if expected < sim_cap {
        let param = GameParameter::from_miss(q.clone())?;
        Some(agreement_length_simulated(&param, sim_cap)?.length)
    } else {
        None
    };
    Ok(CorollaryReport {
        k,
        q,
        expected,
        closed,
        simulated,
    })
}

pub fn corollary_check(k: u32, sim_cap: u64, n_cap: u32) -> Result<bool> {
    corollary_report(k, sim_cap, n_cap).map(|r| r.passed())
}

/// The first `count` numbers of the form `3 * 2^i` or `5 * 2^i`, ascending.
pub fn admissible_values(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let (mut three, mut five) = (3u64, 5u64);
    // u64::MAX marks an exhausted family.
    while out.len() < count {
        let next = three.min(five);
        if next == u64::MAX {
            break;
        }
        out.push(next);
        let doubled = next.checked_mul(2).unwrap_or(u64::MAX);
        if next == three {
            three = doubled;
        } else {
            five = doubled;
        }
    }
    out
}

pub fn is_admissible(length: u64) -> bool {
    if length == 0 {
        return false;
    }
    let odd = length >> length.trailing_zeros();
    odd == 3 || odd == 5
}
