//! `hybess`: evaluate normalized hyper-Bessel functions, tabulate bounds and
//! check them over the unit disk.
//!
//! Exit codes: 0 every adjudicated claim holds (or the command succeeded),
//! 1 usage or configuration error, 2 some claim falsified, 3 some claim
//! inconclusive and none falsified.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod manifest;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{bounds, coeffs, eval, report, scan, verify};

#[derive(Debug, Parser)]
#[command(name = "hybess", version, about = "Normalized hyper-Bessel functions and partial-sum quotient bounds")]
struct Cli {
    /// Worker threads for grid evaluation (defaults to all cores).
    #[arg(long, env = "HYBESS_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate f, f′ or a partial sum at one point.
    Eval(eval::EvalArgs),
    /// Print the coefficient table with recurrence/direct agreement and decay certificates.
    Coeffs(coeffs::CoeffsArgs),
    /// Print λ, μ, the gates and every bound in the chosen variant.
    Bounds(bounds::BoundsArgs),
    /// Adjudicate the lemma, theorem and univalence claims on a disk grid.
    Verify(verify::VerifyArgs),
    /// Sweep α and write gates, bounds and verdicts as CSV.
    Scan(scan::ScanArgs),
    /// Work with existing JSON reports.
    Report(report::ReportArgs),
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        anyhow::ensure!(n > 0, "HYBESS_THREADS must be positive");
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    pool.install(|| match cli.command {
        Command::Eval(a) => eval::run(&a),
        Command::Coeffs(a) => coeffs::run(&a),
        Command::Bounds(a) => bounds::run(&a),
        Command::Verify(a) => verify::run(&a),
        Command::Scan(a) => scan::run(&a),
        Command::Report(a) => report::run(&a),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
