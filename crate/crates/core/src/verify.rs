//! Seeded, deterministic checks of the identities and of the agreement-length
//! classification, as driven by `greedy-galois verify`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convergence::{
    agreement_length_simulated, classify, corollary_report, is_admissible, IntervalClass,
};
use crate::error::Error;
use crate::exec::Execution;
use crate::game::{sign_test, sign_test_transferred, GameParameter};
use crate::numerics::Rational;
use crate::sweep::{Grid, SweepSpec};
use crate::thue_morse::{partial_sum_direct, partial_sum_factored, tm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Oracle,
    Corollary,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub sim_cap: u64,
    pub n_cap: u32,
    pub exec: Execution,
}

impl VerifyConfig {
    pub fn with_seed(seed: u64) -> Self {
        VerifyConfig {
            seed,
            sim_cap: crate::convergence::DEFAULT_SIM_CAP,
            n_cap: crate::convergence::DEFAULT_N_CAP,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub q: Rational,
    pub n: u64,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} N={} expected={} got={}",
            self.q, self.n, self.expected, self.got
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: u64,
    pub total: u64,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.total && self.counterexample.is_none()
    }

    fn tally(name: &'static str, outcomes: impl IntoIterator<Item = Option<Counterexample>>) -> Self {
        let mut report = SuiteReport {
            name,
            passed: 0,
            total: 0,
            counterexample: None,
        };
        for outcome in outcomes {
            report.total += 1;
            match outcome {
                None => report.passed += 1,
                Some(c) => {
                    report.counterexample.get_or_insert(c);
                }
            }
        }
        report
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "pass" } else { "FAIL" };
        write!(f, "{}: {}/{} {verdict}", self.name, self.passed, self.total)?;
        if let Some(c) = &self.counterexample {
            write!(f, " (first counterexample: {c})")?;
        }
        Ok(())
    }
}

/// `count` rationals `a/b` with `2 <= b <= max_denom`, `0 < a < b`.
pub fn seeded_rationals(seed: u64, count: usize, max_denom: i64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.random_range(2..=max_denom);
            Rational::frac(rng.random_range(1..d), d)
        })
        .collect()
}

/// Both grid families over `(1/100, 199/200]`, `per_mode` points each,
/// merged and sorted by `q`. The open lower end is excluded.
pub fn oracle_grid(per_mode: u64) -> Vec<Rational> {
    let lo = Rational::frac(1, 100);
    let hi = Rational::frac(199, 200);
    let mut points = Vec::new();
    for grid in [Grid::UniformQ, Grid::UniformInverseP] {
        let spec = SweepSpec::new(lo.clone(), hi.clone(), per_mode + 1, grid).expect("valid grid");
        points.extend(spec.points().into_iter().skip(1));
    }
    points.sort();
    points.dedup();
    points
}

fn factorization_identity(cfg: &VerifyConfig) -> SuiteReport {
    let qs = seeded_rationals(cfg.seed, 50, 40);
    let per_q = cfg.exec.map(&qs, |q| {
        let mut out = Vec::new();
        for m in (1..=63u64).step_by(2) {
            for r in 0..=6u32 {
                let n = m << r;
                let direct = partial_sum_direct(n, q);
                let factored = partial_sum_factored(n, q).expect("n >= 1");
                out.push((direct != factored).then(|| Counterexample {
                    q: q.clone(),
                    n,
                    expected: direct.to_string(),
                    got: factored.to_string(),
                }));
            }
        }
        out
    });
    SuiteReport::tally("factorization-identity", per_q.into_iter().flatten())
}

fn sign_transfer(cfg: &VerifyConfig) -> SuiteReport {
    let qs = seeded_rationals(cfg.seed.wrapping_add(1), 50, 1000);
    let per_q = cfg.exec.map(&qs, |q| {
        let param = GameParameter::from_miss(q.clone()).expect("seeded q in (0, 1)");
        (1..=256u64)
            .map(|n| {
                let direct = sign_test(&param, n);
                let transferred = sign_test_transferred(&param, n);
                (direct != transferred || direct.is_err()).then(|| Counterexample {
                    q: q.clone(),
                    n,
                    expected: format!("{direct:?}"),
                    got: format!("{transferred:?}"),
                })
            })
            .collect::<Vec<_>>()
    });
    SuiteReport::tally("sign-transfer", per_q.into_iter().flatten())
}

fn tm_recurrence() -> SuiteReport {
    let outcomes = (0..=(1u64 << 16)).map(|n| {
        let ok = tm(2 * n) == tm(n) && tm(2 * n + 1) == -tm(n);
        (!ok).then(|| Counterexample {
            q: Rational::zero(),
            n,
            expected: format!("t(2n)={} t(2n+1)={}", tm(n), -tm(n)),
            got: format!("t(2n)={} t(2n+1)={}", tm(2 * n), tm(2 * n + 1)),
        })
    });
    SuiteReport::tally("tm-recurrence", outcomes)
}

struct OraclePoint {
    q: Rational,
    outcome: Result<(IntervalClass, u64, bool), Error>,
}

fn oracle_suites(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    let mut qs = oracle_grid(260);
    qs.extend(
        seeded_rationals(cfg.seed.wrapping_add(2), 60, 1000)
            .into_iter()
            .filter(|q| *q > Rational::frac(1, 100) && *q <= Rational::frac(199, 200)),
    );
    qs.sort();
    qs.dedup();

    let points = cfg.exec.map(&qs, |q| {
        let outcome = (|| {
            let class = classify(q, cfg.n_cap)?;
            let param = GameParameter::from_miss(q.clone())?;
            let sim = agreement_length_simulated(&param, cfg.sim_cap)?;
            Ok((class, sim.length, sim.tie_flag))
        })();
        OraclePoint {
            q: q.clone(),
            outcome,
        }
    });

    let equivalence = SuiteReport::tally(
        "oracle-equivalence",
        points.iter().map(|pt| match &pt.outcome {
            Ok((class, sim, tie)) if *sim == class.agreement_length() && !tie => None,
            Ok((class, sim, tie)) => Some(Counterexample {
                q: pt.q.clone(),
                n: *sim,
                expected: format!("L={} tie=false", class.agreement_length()),
                got: format!("L={sim} tie={tie}"),
            }),
            Err(e) => Some(Counterexample {
                q: pt.q.clone(),
                n: 0,
                expected: "a result".into(),
                got: e.to_string(),
            }),
        }),
    );

    let lengths: Vec<(Rational, u64, u64)> = points
        .iter()
        .filter_map(|pt| {
            pt.outcome
                .as_ref()
                .ok()
                .map(|(class, sim, _)| (pt.q.clone(), *sim, class.rank()))
        })
        .collect();

    let codomain = SuiteReport::tally(
        "codomain",
        lengths.iter().map(|(q, l, _)| {
            (!is_admissible(*l)).then(|| Counterexample {
                q: q.clone(),
                n: *l,
                expected: "3*2^i or 5*2^i".into(),
                got: l.to_string(),
            })
        }),
    );

    let monotonicity = SuiteReport::tally(
        "monotonicity",
        lengths.windows(2).map(|w| {
            let ((_, l0, c0), (q1, l1, c1)) = (&w[0], &w[1]);
            (l1 < l0 || c1 < c0).then(|| Counterexample {
                q: q1.clone(),
                n: *l1,
                expected: format!(">= {l0}"),
                got: l1.to_string(),
            })
        }),
    );

    vec![equivalence, codomain, monotonicity]
}

fn corollary_suite(cfg: &VerifyConfig) -> SuiteReport {
    let ks: Vec<u32> = (1..=12).collect();
    let outcomes = cfg.exec.map(&ks, |&k| {
        let q = Rational::one() - Rational::dyadic_unit(k);
        match corollary_report(k, cfg.sim_cap, cfg.n_cap) {
            Ok(r) if r.passed() => None,
            Ok(r) => Some(Counterexample {
                q,
                n: r.expected,
                expected: format!("L={}", r.expected),
                got: format!("closed={} sim={:?}", r.closed, r.simulated),
            }),
            Err(e) => Some(Counterexample {
                q,
                n: 3 << (k - 1),
                expected: format!("L={}", 3u64 << (k - 1)),
                got: e.to_string(),
            }),
        }
    });
    SuiteReport::tally("corollary", outcomes)
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Vec<SuiteReport> {
    let mut reports = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        reports.push(factorization_identity(cfg));
        reports.push(sign_transfer(cfg));
        reports.push(tm_recurrence());
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        reports.extend(oracle_suites(cfg));
    }
    if matches!(suite, Suite::Corollary | Suite::All) {
        reports.push(corollary_suite(cfg));
    }
    reports
}
