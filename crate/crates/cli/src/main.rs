//! `frobring`: check finite rings, codes and skew-polynomial quotients given
//! as JSON definition files.
//!
//! Exit status is 0 when every verdict is positive, 1 when a verdict is
//! negative or the input is mathematically invalid, and 2 on I/O, parse or
//! enumeration-cap errors.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "frobring", version, about = "Frobenius rings, skew quotients and ring-linear codes")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of elements any single enumeration may visit.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ring checks.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Code checks over a ring alphabet.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Skew-polynomial quotients.
    #[command(subcommand)]
    Skew(SkewCommand),
}

#[derive(Subcommand, Debug)]
enum RingCommand {
    /// Validate a ring definition.
    Validate { ring: PathBuf },
    /// Decide the Frobenius property by functional search and by socles.
    Frobenius { ring: PathBuf },
}

#[derive(clap::Args, Debug)]
struct CodeArgs {
    ring: PathBuf,
    code: PathBuf,
    /// Ambient form matrix; the identity when omitted.
    #[arg(long, value_name = "FILE")]
    form: Option<PathBuf>,
    /// Side of the orthogonal; defaults to the side opposite the code.
    #[arg(long, value_enum)]
    side: Option<SideArg>,
}

#[derive(Subcommand, Debug)]
enum CodeCommand {
    /// The dual code.
    Dual(CodeArgs),
    /// The Hamming weight enumerator.
    Wenum(CodeArgs),
    /// Compare the dual's enumerator with the MacWilliams transform.
    Macwilliams(CodeArgs),
}

#[derive(Subcommand, Debug)]
enum SkewCommand {
    /// Check two-sidedness and export the quotient as a table.
    Build { spec: PathBuf },
    /// Check the form ε((gh)_0) and the socle test on the quotient.
    Frobenius { spec: PathBuf },
    /// Duality report for every left ideal of A[x; σ]/(x^m − 1).
    Sweep { spec: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

fn run(cli: &Cli) -> Result<report::Report, Failure> {
    match &cli.command {
        Command::Ring(RingCommand::Validate { ring }) => commands::ring_validate(ring),
        Command::Ring(RingCommand::Frobenius { ring }) => commands::ring_frobenius(ring),
        Command::Code(cmd) => {
            let (verb, args) = match cmd {
                CodeCommand::Dual(a) => ("dual", a),
                CodeCommand::Wenum(a) => ("wenum", a),
                CodeCommand::Macwilliams(a) => ("macwilliams", a),
            };
            commands::code(verb, &args.ring, &args.code, args.form.as_deref(), args.side)
        }
        Command::Skew(cmd) => match cmd {
            SkewCommand::Build { spec } => commands::skew_build(spec),
            SkewCommand::Frobenius { spec } => commands::skew_frobenius(spec),
            SkewCommand::Sweep { spec } => commands::skew_sweep(spec),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(cap) = cli.cap {
        frobring::znmod::set_enumeration_cap(cap);
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let out = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
