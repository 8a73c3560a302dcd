use thiserror::Error;

use crate::numerics::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as a rational number (expected `a/b`, `a` or a finite decimal)")]
    Parse(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("exponent {0} exceeds 2^63 - 1")]
    ExponentTooLarge(u64),

    #[error("miss probability q = {0} is outside the open interval (0, 1)")]
    OutOfRange(Rational),

    #[error("index 0 has no dyadic decomposition")]
    ZeroIndex,

    #[error("no disagreement with Thue-Morse within {cap} shots (raise --cap)")]
    CapExceeded { cap: u64 },

    #[error("q^(2^n) squaring depth exceeded n_cap = {n_cap} (raise --ncap)")]
    NCapExceeded { n_cap: u32 },

    #[error("boundary polynomial vanished exactly at {0}")]
    ZeroSign(Rational),

    #[error("partial sum S_{n}(q) is exactly zero at q = {q}")]
    Tie { q: Rational, n: u64 },

    #[error("closed form gives L = {closed} but simulation gives L = {simulated} at q = {q}")]
    Mismatch {
        q: Rational,
        closed: u64,
        simulated: u64,
    },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::NCapExceeded { .. } => 3,
            Error::Parse(_)
            | Error::ZeroDenominator
            | Error::OutOfRange(_)
            | Error::ZeroIndex
            | Error::ExponentTooLarge(_)
            | Error::InvalidSweep(_) => 2,
            Error::ZeroSign(_) | Error::Tie { .. } | Error::Mismatch { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
