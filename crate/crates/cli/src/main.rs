mod commands;
mod config;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use serde::Serialize;

use output::{Format, Sink};

/// Problems with the invocation or configuration rather than the physics.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser, Debug)]
#[command(name = "ionchain", version, about = "Normal modes, cubic mode coupling and phonon down-conversion in linear ion chains")]
struct Cli {
    /// File format for written outputs
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Significant digits in printed and written numbers
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
    /// Directory for output files and manifests; nothing is written without it
    #[arg(long, global = true, env = "IONCHAIN_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensionless equilibrium positions
    Equilibrium(commands::EquilibriumArgs),
    /// Axial and transverse normal modes
    Modes(commands::ModesArgs),
    /// Nonzero cubic coupling coefficients and identity residuals
    Tensors(commands::TensorsArgs),
    /// Resonance catalogs and anisotropy bounds for a range of chain lengths
    Tables(commands::TablesArgs),
    /// Quantum down-conversion dynamics from a TOML configuration
    Simulate(commands::SimulateArgs),
    /// Classical trajectories, mode energies and spectra from a TOML configuration
    Classical(commands::ClassicalArgs),
    /// Nonlinearity parameter and resonant coupling rate
    Epsilon(commands::EpsilonArgs),
}

fn sink<A: Serialize>(cli: &Cli, name: &str, args: &A) -> Sink {
    let params = serde_json::to_value(args).unwrap_or(serde_json::Value::Null);
    Sink::new(cli.out_dir.clone(), cli.format, cli.precision as usize, name, params)
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Equilibrium(a) => commands::equilibrium(a, &sink(cli, "equilibrium", a)),
        Command::Modes(a) => commands::modes(a, &sink(cli, "modes", a)),
        Command::Tensors(a) => commands::tensors(a, &sink(cli, "tensors", a)),
        Command::Tables(a) => commands::tables(a, &sink(cli, "tables", a)),
        Command::Simulate(a) => commands::simulate(a, &sink(cli, "simulate", a)),
        Command::Classical(a) => commands::classical(a, &sink(cli, "classical", a)),
        Command::Epsilon(a) => commands::epsilon_cmd(a, &sink(cli, "epsilon", a)),
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
