//! Command-line front end for `ratiosel-core`.

pub mod bench;
pub mod error;
pub mod gappy;
pub mod io;
pub mod solve;
pub mod verify;

use clap::{Parser, Subcommand};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "ratiosel",
    version,
    about = "Select n of N indices minimizing a ratio of sums"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance read from a CSV file.
    Solve(solve::SolveArgs),
    /// Run the seeded property sweeps.
    Verify(verify::VerifyArgs),
    /// Time the solvers across instance sizes.
    Bench(bench::BenchArgs),
    /// Pick sample rows for a gappy reconstruction and check the error bound.
    Gappy(gappy::GappyArgs),
}
