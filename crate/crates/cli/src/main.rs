//! `entropy-modes`: JSON reports and plot-ready TSV for the two-limit
//! mode statistics in the `entropy-modes` library.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod cmd;
mod report;

#[derive(Parser, Debug)]
#[command(name = "entropy-modes", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Occupancy, temperature and entropy of a single mode.
    Modes(cmd::modes::ModesArgs),
    /// Shannon information and H-function of a binary file.
    Entropy(cmd::entropy::EntropyArgs),
    /// First-digit conformance of a dataset with Benford's law.
    Benford(cmd::benford::BenfordArgs),
    /// The log-log occupancy curve and its slope.
    Powerlaw(cmd::powerlaw::PowerlawArgs),
    /// Seeded quanta-exchange Monte Carlo.
    Simulate(cmd::simulate::SimulateArgs),
    /// Amplification of a Hook oscillator and Carnot efficiency.
    Carnot(cmd::carnot::CarnotArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Modes(a) => cmd::modes::run(a),
        Command::Entropy(a) => cmd::entropy::run(a),
        Command::Benford(a) => cmd::benford::run(a),
        Command::Powerlaw(a) => cmd::powerlaw::run(a),
        Command::Simulate(a) => cmd::simulate::run(a),
        Command::Carnot(a) => cmd::carnot::run(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
