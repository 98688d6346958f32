//! `normcheck`: resolvent norms, pseudospectra and normality certificates
//! for dense complex matrices.

mod commands;
mod exit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use exit::Failure;

/// Environment variable overriding the default `--seed`.
pub const SEED_ENV: &str = "NORMCHECK_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "normcheck",
    version,
    about = "Normality, pseudospectra and norm-behavior analysis for complex matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify or refute normality; exit 0 NORMAL, 1 NOT_NORMAL, 2 INCONCLUSIVE.
    Analyze {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, env = SEED_ENV, default_value_t = 42)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Evaluate the resolvent norm on a grid and write CSV.
    Pseudospec {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// `auto` or `x0,x1,y0,y1`.
        #[arg(long, default_value = "auto", allow_hyphen_values = true)]
        region: String,
        /// `NXxNY`.
        #[arg(long, default_value = "101x101")]
        grid: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Compare two matrices; exit 0 equivalent, 1 not equivalent.
    Compare {
        #[arg(long, value_name = "PATH")]
        a: PathBuf,
        #[arg(long, value_name = "PATH")]
        b: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Polynomial degree for `normbehavior`; defaults to max(n_A, n_B) - 1.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 32)]
        trials: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Generate a test matrix; `.mtx` paths get Matrix Market, anything else JSON.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Comma-separated eigenvalues such as `1,-1,2+3i`, padded with the last value.
        #[arg(long, allow_hyphen_values = true)]
        spectrum: Option<String>,
        #[arg(long, env = SEED_ENV, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Mode {
    Pseudospectra,
    Normbehavior,
    Unitary,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Kind {
    Normal,
    Jordan,
    Random,
    Unitary,
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { input, tol, seed, out } => commands::analyze(&input, tol, seed, out.as_deref()),
        Command::Pseudospec { input, region, grid, out } => {
            commands::pseudospec(&input, &region, &grid, out.as_deref())
        }
        Command::Compare { a, b, mode, degree, trials, seed, tol, out } => {
            commands::compare(&a, &b, mode, degree, trials, seed, tol, out.as_deref())
        }
        Command::Gen { kind, n, spectrum, seed, out } => {
            commands::generate(kind, n, spectrum.as_deref(), seed, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("normcheck: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
