use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use greedy_galois::cli::{render_boundaries, render_classify, render_lq, render_reports, render_shots, LqMode};
use greedy_galois::convergence::{DEFAULT_N_CAP, DEFAULT_SIM_CAP};
use greedy_galois::sweep::{run_sweep, write_csv, Grid, SweepOptions, SweepSpec};
use greedy_galois::verify::{self, Suite, VerifyConfig};
use greedy_galois::{Error, Execution, GameParameter, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "greedy-galois",
    version,
    about = "Greedy Galois duel shot orders versus the Thue-Morse sequence, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the first greedy shots (A = Alice, B = Bob)
    Shots {
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long, default_value_t = 16)]
        length: u64,
    },
    /// Agreement length with Thue-Morse
    Lq {
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long, value_enum, default_value_t = LqMode::Both)]
        mode: LqMode,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Which agreement-length interval q falls in
    Classify {
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        ncap: u32,
    },
    /// Bisection brackets for the two boundary roots
    Boundaries {
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
        bits: u32,
    },
    /// Sweep a grid of q values to CSV
    Sweep(SweepArgs),
    /// Run the seeded verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ParamArgs {
    /// Miss probability, as `a/b` or a finite decimal
    #[arg(long)]
    q: Option<Rational>,
    /// Hit probability, as `a/b` or a finite decimal
    #[arg(long)]
    p: Option<Rational>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<GameParameter, Error> {
        match (&self.q, &self.p) {
            (Some(q), _) => GameParameter::from_miss(q.clone()),
            (_, Some(p)) => GameParameter::from_hit(p.clone()),
            _ => unreachable!("clap enforces one of --q / --p"),
        }
    }
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Maximum number of simulated shots
    #[arg(long, default_value_t = DEFAULT_SIM_CAP)]
    cap: u64,
    /// Maximum squaring depth of the classifier
    #[arg(long, default_value_t = DEFAULT_N_CAP)]
    ncap: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridArg {
    Q,
    InverseP,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, requires = "q_max", conflicts_with_all = ["inv_p_min", "inv_p_max"])]
    q_min: Option<Rational>,
    #[arg(long, requires = "q_min")]
    q_max: Option<Rational>,
    /// Lower 1/p bound, alternative to --q-min
    #[arg(long, requires = "inv_p_max")]
    inv_p_min: Option<Rational>,
    #[arg(long, requires = "inv_p_min")]
    inv_p_max: Option<Rational>,
    #[arg(long, default_value_t = 300)]
    steps: u64,
    #[arg(long, value_enum, default_value_t = GridArg::InverseP)]
    grid: GridArg,
    /// Output CSV path, `-` for stdout
    #[arg(long, default_value = "-")]
    out: PathBuf,
    /// Skip the simulation cross-check (leaves L_sim empty)
    #[arg(long)]
    no_sim: bool,
    #[command(flatten)]
    caps: CapArgs,
}

impl SweepArgs {
    fn spec(&self) -> Result<SweepSpec, Error> {
        let grid = match self.grid {
            GridArg::Q => Grid::UniformQ,
            GridArg::InverseP => Grid::UniformInverseP,
        };
        match (&self.q_min, &self.q_max, &self.inv_p_min, &self.inv_p_max) {
            (Some(lo), Some(hi), _, _) => SweepSpec::new(lo.clone(), hi.clone(), self.steps, grid),
            (_, _, Some(lo), Some(hi)) => SweepSpec::inverse_p(lo.clone(), hi.clone(), self.steps, grid),
            _ => Err(Error::InvalidSweep(
                "give --q-min/--q-max or --inv-p-min/--inv-p-max".into(),
            )),
        }
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(err.exit_code() as u8)
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Shots { param, length } => {
            let param = param.resolve()?;
            print!("{}", render_shots(&param, length));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lq { param, mode, caps } => {
            let (text, ok) = render_lq(&param.resolve()?, mode, caps.cap, caps.ncap)?;
            print!("{text}");
            Ok(status(ok))
        }
        Command::Classify { param, ncap } => {
            print!("{}", render_classify(&param.resolve()?, ncap)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundaries { bits } => {
            print!("{}", render_boundaries(bits));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep(args) => {
            let spec = args.spec()?;
            let opts = SweepOptions {
                simulate: !args.no_sim,
                sim_cap: args.caps.cap,
                n_cap: args.caps.ncap,
            };
            let rows = run_sweep(&spec, &opts, Execution::default())?;
            let written = if args.out.as_os_str() == "-" {
                write_csv(&rows, io::stdout().lock())
            } else {
                File::create(&args.out).and_then(|f| write_csv(&rows, BufWriter::new(f)))
            };
            if let Err(e) = written {
                eprintln!("error: writing {}: {e}", args.out.display());
                return Ok(ExitCode::from(1));
            }
            if args.out.as_os_str() != "-" {
                eprintln!("wrote {} rows to {}", rows.len(), args.out.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, seed, caps } => {
            let cfg = VerifyConfig {
                sim_cap: caps.cap,
                n_cap: caps.ncap,
                ..VerifyConfig::with_seed(seed)
            };
            let (text, ok) = render_reports(&verify::run(suite, &cfg));
            print!("{text}");
            io::stdout().flush().ok();
            Ok(status(ok))
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(fail)
}
