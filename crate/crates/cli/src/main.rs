mod commands;
mod layout;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use feigenbaum::solver::Branch;

use crate::layout::Layout;

#[derive(Debug, Parser)]
#[command(
    name = "feigenbaum",
    version,
    about = "Solve -lambda g(x) = g(g(lambda x)) to high precision"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct BranchArgs {
    /// Smoothness order of the maximum (even, 2..14)
    #[arg(long)]
    pub z: u32,
    #[arg(long, default_value = "principal", value_parser = parse_branch)]
    pub branch: Branch,
}

#[derive(Debug, Args, Clone)]
pub struct SolveArgs {
    #[command(flatten)]
    pub branch: BranchArgs,
    /// Stable digits of 1/lambda to reach
    #[arg(long, default_value_t = 30)]
    pub digits: u32,
    #[arg(long = "initial-order", default_value_t = 12)]
    pub initial_order: usize,
    #[arg(long = "max-order", default_value_t = 200)]
    pub max_order: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one branch and write its checkpoint and tables
    Solve {
        #[command(flatten)]
        solve: SolveArgs,
        /// Output directory
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "plain")]
        format: Layout,
    },
    /// Convert a checkpoint to Taylor coefficients
    Convert {
        checkpoint: PathBuf,
        /// Highest power of x to emit (defaults to what the series holds)
        #[arg(long = "max-exponent")]
        max_exponent: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "plain")]
        format: Layout,
    },
    /// Solve and compare against the published tables
    Verify {
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Tabulate g(x) on a uniform grid of [0, 1]
    Sample {
        checkpoint: PathBuf,
        #[arg(long, default_value_t = 101)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse().map_err(|e: feigenbaum::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve { solve, out, format } => commands::solve(&solve, &out, format),
        Command::Convert {
            checkpoint,
            max_exponent,
            out,
            format,
        } => commands::convert(&checkpoint, max_exponent, out.as_deref(), format),
        Command::Verify { solve } => commands::verify(&solve),
        Command::Sample {
            checkpoint,
            samples,
            out,
        } => commands::sample(&checkpoint, samples, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
