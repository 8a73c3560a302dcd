//! Text rendering for the command-line front end. Each function returns the
//! text to print and whether the command succeeded.

use std::fmt::Write as _;

use crate::convergence::{agreement_length_closed_form, agreement_length_simulated, classify};
use crate::error::Result;
use crate::game::{greedy_sequence, GameParameter};
use crate::numerics::{approx_boundary, BoundaryPolynomial, Rational, Sign};
use crate::verify::SuiteReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LqMode {
    Sim,
    Closed,
    Both,
}

/// Two lines: player initials, then the ±1 encoding.
pub fn render_shots(param: &GameParameter, length: u64) -> String {
    let seq = greedy_sequence(param, length);
    let names: Vec<&str> = seq
        .shots()
        .iter()
        .map(|s| if *s == Sign::Positive { "A" } else { "B" })
        .collect();
    let signs: Vec<String> = seq.shots().iter().map(Sign::to_string).collect();
    format!("{}\n{}\n", names.join(" "), signs.join(" "))
}

/// Returns the rendered line and `false` on a MISMATCH.
pub fn render_lq(param: &GameParameter, mode: LqMode, cap: u64, n_cap: u32) -> Result<(String, bool)> {
    let closed = || agreement_length_closed_form(param.q(), n_cap).map(|r| r.length);
    let sim = || agreement_length_simulated(param, cap).map(|r| r.length);
    Ok(match mode {
        LqMode::Closed => (format!("{}\n", closed()?), true),
        LqMode::Sim => (format!("{}\n", sim()?), true),
        LqMode::Both => {
            let (c, s) = (closed()?, sim()?);
            let verdict = if c == s { "MATCH" } else { "MISMATCH" };
            (format!("closed={c} sim={s} {verdict}\n"), c == s)
        }
    })
}

pub fn render_classify(param: &GameParameter, n_cap: u32) -> Result<String> {
    let class = classify(param.q(), n_cap)?;
    Ok(format!("{class} L={}\n", class.agreement_length()))
}

pub fn render_boundaries(bits: u32) -> String {
    // Enough digits to resolve a bracket of width 2^-bits.
    let digits = (bits as f64 * std::f64::consts::LOG10_2).ceil() as u32 + 2;
    let mut out = String::new();
    for poly in [BoundaryPolynomial::Quadratic, BoundaryPolynomial::Quartic] {
        let (lo, hi) = approx_boundary(poly, bits);
        let mid = (&lo + &hi) * Rational::frac(1, 2);
        writeln!(
            out,
            "{} in [{}, {}] width 2^-{bits} ~ {}",
            poly.name(),
            lo.to_decimal(digits),
            hi.to_decimal(digits),
            mid.to_decimal(digits.max(1)),
        )
        .expect("write to String");
        writeln!(out, "  exact bracket: [{lo}, {hi}]").expect("write to String");
    }
    out
}

pub fn render_reports(reports: &[SuiteReport]) -> (String, bool) {
    let mut out = String::new();
    for r in reports {
        writeln!(out, "{r}").expect("write to String");
    }
    (out, reports.iter().all(SuiteReport::ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn param(s: &str) -> GameParameter {
        GameParameter::from_miss(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn shots_rendering() {
        assert_eq!(render_shots(&param("2/3"), 7), "A B B A B A B\n+1 -1 -1 +1 -1 +1 -1\n");
        assert!(render_shots(&param("1/2"), 4).starts_with("A B B B\n"));
        assert!(render_shots(&param("1/3"), 4).starts_with("A B B B\n"));
    }

    #[test]
    fn lq_rendering() {
        let (s, ok) = render_lq(&param("2/3"), LqMode::Both, 16384, 64).unwrap();
        assert_eq!((s.as_str(), ok), ("closed=6 sim=6 MATCH\n", true));
        let (s, _) = render_lq(&param("9/10"), LqMode::Both, 16384, 64).unwrap();
        assert_eq!(s, "closed=20 sim=20 MATCH\n");
        let (s, _) = render_lq(&param("1/2"), LqMode::Closed, 16384, 64).unwrap();
        assert_eq!(s, "3\n");
        assert!(render_lq(&param("999/1000"), LqMode::Sim, 100, 64).is_err());
    }

    #[test]
    fn boundaries_rendering() {
        let text = render_boundaries(40);
        assert!(text.contains("alpha in [0.618033988749"), "{text}");
        assert!(text.contains("beta in [0.660992531889"), "{text}");
        let coarse = render_boundaries(1);
        assert!(coarse.contains("exact bracket: [1/2, 1]"), "{coarse}");
    }
}
