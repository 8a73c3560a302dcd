//! Exact analysis of the greedy Galois duel.
//!
//! Alice and Bob take turns shooting, each shot hitting with probability `p`,
//! and the next shot always goes to the player whose probability of having
//! already won is smaller. For miss probability `q = 1 - p` the resulting
//! order of shooters agrees with the ±1 Thue-Morse sequence on a prefix of
//! length `L_q`. This crate computes `L_q` exactly for rational `q`, both by
//! playing the game and by locating `q` among intervals bounded by powers of
//! the roots of `1 - X - X^2` and `1 - X - X^2 + X^3 - X^4`, and checks that
//! the two agree.
//!
//! ```
//! use greedy_galois::{agreement_length_closed_form, agreement_length_simulated};
//! use greedy_galois::{GameParameter, Rational};
//!
//! let q = Rational::frac(2, 3);
//! let game = GameParameter::from_miss(q.clone()).unwrap();
//! assert_eq!(agreement_length_simulated(&game, 1 << 14).unwrap().length, 6);
//! assert_eq!(agreement_length_closed_form(&q, 64).unwrap().length, 6);
//! ```

pub mod cli;
pub mod convergence;
pub mod error;
pub mod exec;
pub mod game;
pub mod numerics;
pub mod sweep;
pub mod thue_morse;
pub mod verify;

pub use convergence::{
    admissible_values, agreement_length_closed_form, agreement_length_simulated, classify,
    corollary_check, AgreementResult, IntervalClass, Method,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use game::{greedy_sequence, win_probabilities, GameParameter, ShotSequence, WinProbabilities};
pub use numerics::{approx_boundary, pow_by_squaring, sign_of_boundary, BoundaryPolynomial, Rational, Sign};
pub use thue_morse::{partial_sum_direct, partial_sum_factored, tm, tm_prefix};
