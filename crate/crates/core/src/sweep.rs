//! Parameter sweeps over `q` and their CSV rendering.

use std::io::{self, Write};

use crate::convergence::{agreement_length_simulated, classify, IntervalClass};
use crate::convergence::{DEFAULT_N_CAP, DEFAULT_SIM_CAP};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::game::GameParameter;
use crate::numerics::Rational;

pub const CSV_HEADER: &str = "p,q,inv_p,L_closed,L_sim,class,tie";

/// Significant digits of the `inv_p` column.
pub const INV_P_DIGITS: u32 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grid {
    /// Evenly spaced in `q`.
    UniformQ,
    /// Evenly spaced in `1/p = 1/(1 - q)`.
    UniformInverseP,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    q_min: Rational,
    q_max: Rational,
    steps: u64,
    grid: Grid,
}

impl SweepSpec {
    pub fn new(q_min: Rational, q_max: Rational, steps: u64, grid: Grid) -> Result<Self> {
        if !q_min.is_unit_interior() || !q_max.is_unit_interior() {
            return Err(Error::InvalidSweep(format!(
                "bounds {q_min} and {q_max} must lie in (0, 1)"
            )));
        }
        if q_min >= q_max {
            return Err(Error::InvalidSweep(format!("q_min {q_min} is not below q_max {q_max}")));
        }
        if steps < 2 {
            return Err(Error::InvalidSweep(format!("need at least 2 steps, got {steps}")));
        }
        Ok(SweepSpec {
            q_min,
            q_max,
            steps,
            grid,
        })
    }

    /// Sweep given by a range of `1/p`; both bounds must exceed 1.
    pub fn inverse_p(min: Rational, max: Rational, steps: u64, grid: Grid) -> Result<Self> {
        let to_q = |x: &Rational| -> Result<Rational> {
            if *x <= 1 {
                return Err(Error::InvalidSweep(format!("1/p bound {x} must exceed 1")));
            }
            Ok(Rational::one() - x.recip().expect("nonzero"))
        };
        Self::new(to_q(&min)?, to_q(&max)?, steps, grid)
    }

    pub fn q_min(&self) -> &Rational {
        &self.q_min
    }

    pub fn q_max(&self) -> &Rational {
        &self.q_max
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    /// Grid points in ascending `q`, both endpoints included.
    pub fn points(&self) -> Vec<Rational> {
        let last = Rational::integer(self.steps as i64 - 1);
        let lerp = |lo: &Rational, hi: &Rational, i: u64| -> Rational {
            lo + (hi - lo) * Rational::integer(i as i64) / &last
        };
        match self.grid {
            Grid::UniformQ => (0..self.steps)
                .map(|i| lerp(&self.q_min, &self.q_max, i))
                .collect(),
            Grid::UniformInverseP => {
                let one = Rational::one();
                let inv = |q: &Rational| (&one - q).recip().expect("q < 1");
                let (lo, hi) = (inv(&self.q_min), inv(&self.q_max));
                (0..self.steps)
                    .map(|i| &one - lerp(&lo, &hi, i).recip().expect("1/p > 1"))
                    .collect()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub simulate: bool,
    pub sim_cap: u64,
    pub n_cap: u32,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            simulate: true,
            sim_cap: DEFAULT_SIM_CAP,
            n_cap: DEFAULT_N_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub p: Rational,
    pub q: Rational,
    pub inverse_p: String,
    pub l_closed: u64,
    pub l_sim: Option<u64>,
    pub class: IntervalClass,
    pub tie_flag: bool,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.p,
            self.q,
            self.inverse_p,
            self.l_closed,
            self.l_sim.map(|l| l.to_string()).unwrap_or_default(),
            self.class,
            u8::from(self.tie_flag),
        )
    }
}

/// Classifies one `q` and, if asked, cross-checks it by simulation. A
/// mismatch or a tie is an error.
pub fn evaluate_point(q: &Rational, opts: &SweepOptions) -> Result<SweepRow> {
    let param = GameParameter::from_miss(q.clone())?;
    let class = classify(q, opts.n_cap)?;
    let l_closed = class.agreement_length();
    let (l_sim, tie_flag) = if opts.simulate {
        let sim = agreement_length_simulated(&param, opts.sim_cap)?;
        if sim.length != l_closed {
            return Err(Error::Mismatch {
                q: q.clone(),
                closed: l_closed,
                simulated: sim.length,
            });
        }
        (Some(sim.length), sim.tie_flag)
    } else {
        (None, false)
    };
    if tie_flag {
        return Err(Error::Tie {
            q: q.clone(),
            n: l_closed,
        });
    }
    Ok(SweepRow {
        inverse_p: param.p().recip().expect("p > 0").to_decimal(INV_P_DIGITS),
        p: param.p().clone(),
        q: q.clone(),
        l_closed,
        l_sim,
        class,
        tie_flag,
    })
}

/// Evaluates every point; the first failing row in ascending-`q` order is
/// reported.
pub fn evaluate_points(
    points: &[Rational],
    opts: &SweepOptions,
    exec: Execution,
) -> Result<Vec<SweepRow>> {
    exec.map(points, |q| evaluate_point(q, opts))
        .into_iter()
        .collect()
}

pub fn run_sweep(spec: &SweepSpec, opts: &SweepOptions, exec: Execution) -> Result<Vec<SweepRow>> {
    evaluate_points(&spec.points(), opts, exec)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convergence::is_admissible;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn sweep_validation() {
        assert!(SweepSpec::new(r("0"), r("1/2"), 10, Grid::UniformQ).is_err());
        assert!(SweepSpec::new(r("1/2"), r("1"), 10, Grid::UniformQ).is_err());
        assert!(SweepSpec::new(r("1/2"), r("1/3"), 10, Grid::UniformQ).is_err());
        assert!(SweepSpec::new(r("1/3"), r("1/2"), 1, Grid::UniformQ).is_err());
        assert!(SweepSpec::inverse_p(r("1"), r("5"), 10, Grid::UniformInverseP).is_err());
        let s = SweepSpec::inverse_p(r("2"), r("50"), 3, Grid::UniformInverseP).unwrap();
        assert_eq!((s.q_min(), s.q_max()), (&r("1/2"), &r("49/50")));
    }

    #[test]
    fn grids_are_ascending_with_exact_endpoints() {
        let s = SweepSpec::new(r("1/10"), r("99/100"), 200, Grid::UniformQ).unwrap();
        let pts = s.points();
        assert_eq!(pts.len(), 200);
        assert_eq!((&pts[0], &pts[199]), (&r("1/10"), &r("99/100")));
        assert!(pts.windows(2).all(|w| w[0] < w[1]));

        let s = SweepSpec::inverse_p(r("2"), r("20"), 19, Grid::UniformInverseP).unwrap();
        let pts = s.points();
        let expected: Vec<Rational> = (2..=20).map(|x| Rational::one() - Rational::frac(1, x)).collect();
        assert_eq!(pts, expected);
    }

    #[test]
    fn closed_form_sweep_stays_in_codomain() {
        let s = SweepSpec::new(r("1/10"), r("99/100"), 200, Grid::UniformQ).unwrap();
        let opts = SweepOptions {
            simulate: false,
            ..SweepOptions::default()
        };
        let rows = run_sweep(&s, &opts, Execution::default()).unwrap();
        assert_eq!(rows.len(), 200);
        for row in &rows {
            assert!(is_admissible(row.l_closed));
            assert_eq!(&row.p + &row.q, Rational::one());
            assert_eq!(row.l_sim, None);
        }
    }

    #[test]
    fn row_rendering() {
        let row = evaluate_point(&r("2/3"), &SweepOptions::default()).unwrap();
        assert_eq!(row.csv_line(), "1/3,2/3,3.00000000000000,6,6,three:0,0");
        let row = evaluate_point(
            &r("9/10"),
            &SweepOptions {
                simulate: false,
                ..SweepOptions::default()
            },
        )
        .unwrap();
        assert_eq!(row.csv_line(), "1/10,9/10,10.0000000000000,20,,five:2,0");
    }

    #[test]
    fn sweep_errors_surface() {
        let opts = SweepOptions {
            sim_cap: 8,
            ..SweepOptions::default()
        };
        assert_eq!(
            evaluate_point(&r("9/10"), &opts),
            Err(Error::CapExceeded { cap: 8 })
        );
        let opts = SweepOptions {
            n_cap: 0,
            ..SweepOptions::default()
        };
        assert!(matches!(
            evaluate_points(&[r("1/2"), r("9/10"), r("99/100")], &opts, Execution::Sequential),
            Err(Error::NCapExceeded { n_cap: 0 })
        ));
    }

    #[test]
    fn csv_is_deterministic_across_strategies() {
        let s = SweepSpec::inverse_p(r("2"), r("30"), 60, Grid::UniformInverseP).unwrap();
        let opts = SweepOptions::default();
        let render = |exec| {
            let mut buf = Vec::new();
            write_csv(&run_sweep(&s, &opts, exec).unwrap(), &mut buf).unwrap();
            buf
        };
        let a = render(Execution::Sequential);
        assert_eq!(a, render(Execution::default()));
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with("p,q,inv_p,L_closed,L_sim,class,tie\n1/2,1/2,2.00000000000000,3,3,small,0\n"));
        assert!(text.ends_with('\n'));
    }
}
