use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use valab_cli::commands::{self, CliError};
use valab_cli::report::Report;

/// Exact-arithmetic checker for structure-constant algebras: axiom suites,
/// ring and Leibniz invariants, invariant-form subspace tables, and the
/// raising-operator / Heisenberg constructions.
#[derive(Parser)]
#[command(name = "valab", version, about)]
struct Cli {
    /// Emit the report as JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable axiom suite on a fixture file.
    Check { file: PathBuf },
    /// Compute ring, Leibniz and bilinear-form invariants.
    Invariants { file: PathBuf },
    /// Solve for L(1), pin the gauge, and run the Heisenberg construction.
    Semiconformal { file: PathBuf },
    /// Apply seeded single-coefficient mutations and report which are caught.
    Mutate {
        file: PathBuf,
        /// RNG seed; identical seeds reproduce identical mutation batches.
        #[arg(long)]
        seed: u64,
        /// Number of mutations to draw.
        #[arg(long)]
        count: usize,
    },
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_human());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(Report, i32), CliError> = match &cli.command {
        Command::Check { file } => commands::cmd_check(file),
        Command::Invariants { file } => commands::cmd_invariants(file),
        Command::Semiconformal { file } => commands::cmd_semiconformal(file),
        Command::Mutate { file, seed, count } => commands::cmd_mutate(file, *seed, *count),
    };
    match result {
        Ok((report, code)) => {
            emit(&report, cli.json);
            ExitCode::from(code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
