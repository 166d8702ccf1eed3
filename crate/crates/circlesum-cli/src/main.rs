//! `circlesum`: JSON-in/JSON-out pipelines for unit-weight circle
//! representations, harmonic extraction, Fourier coefficients without
//! integration, approximation error sweeps, and certificate verification.

mod commands;
mod failure;
mod jsonio;
mod signal;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use failure::Failure;

#[derive(Parser)]
#[command(
    name = "circlesum",
    version,
    about = "Power-sum representations on the unit circle and their applications",
    after_help = "Exit codes: 0 ok, 1 verify failure, 2 precondition, 3 numerical failure, 64 usage.\n\
                  CIRCLESUM_MAX_N caps the working degree (default 200)."
)]
struct Cli {
    /// Seed for generated job inputs (`{"bounded_random": {...}}` fields)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the representation certificate for targets in a JSON job
    Represent {
        /// Job document: {"a": [[re,im],...], "n": <int>}
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the result here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract a harmonic from a signal file over a time grid
    Harmonics {
        /// Signal file (see README for the format)
        #[arg(long)]
        signal: PathBuf,
        /// Harmonic index, or "all"
        #[arg(long)]
        nu: NuArg,
        /// Number of grid points over one period
        #[arg(long, default_value_t = 720)]
        grid: usize,
        /// Write t, signal, tau_nu, theta columns here
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fourier coefficients by pure phase sums
    Fourier {
        #[arg(long)]
        signal: PathBuf,
        /// Harmonic index, or "all"
        #[arg(long)]
        nu: NuArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Approximation error sweeps
    Approx {
        #[arg(long, value_enum)]
        mode: ApproxMode,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a previously emitted certificate
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ApproxMode {
    /// Simple partial fractions with unimodular poles
    Spf,
    /// Sums of unimodular exponentials
    Exp,
    /// Generator sums Σ λ_k h(λ_k z)
    Hsum,
}

#[derive(Clone, Debug)]
pub enum NuArg {
    All,
    One(usize),
}

impl FromStr for NuArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(NuArg::All);
        }
        s.parse::<usize>()
            .map(NuArg::One)
            .map_err(|_| format!("expected a harmonic index or \"all\", got {s:?}"))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Represent { input, out } => commands::represent::run(input, out.as_deref()),
        Command::Harmonics {
            signal,
            nu,
            grid,
            csv,
            out,
        } => commands::harmonics::run_harmonics(signal, nu, *grid, csv.as_deref(), out.as_deref()),
        Command::Fourier { signal, nu, out } => {
            commands::harmonics::run_fourier(signal, nu, out.as_deref())
        }
        Command::Approx { mode, input, out } => {
            commands::approx::run(*mode, input, out.as_deref(), cli.seed)
        }
        Command::Verify { input } => commands::verify::run(input),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(failure::EXIT_USAGE as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&f.diagnostics()).expect("diagnostics serialize")
            );
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
