//! `verify`: seeded property sweeps.

use std::path::PathBuf;

use clap::Args;
use ratiosel_core::verify::run_all;
use ratiosel_core::{SweepConfig, VerificationReport, DEFAULT_ENUMERATION_CAP};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Instances per sweep.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Largest array length drawn.
    #[arg(long = "max-N", visible_alias = "max-n", default_value_t = 12)]
    pub max_n: usize,
    /// Elements are drawn from [1, 2^bits].
    #[arg(long, default_value_t = 8)]
    pub magnitude_bits: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Enumeration cap; larger (instance, n) pairs are skipped.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfigRecord {
    pub trials: usize,
    pub max_n: usize,
    pub magnitude_bits: u32,
    pub seed: u64,
    pub cap: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutput {
    pub config: VerifyConfigRecord,
    pub passed: bool,
    #[serde(flatten)]
    pub report: VerificationReport,
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyOutput, CliError> {
    if args.magnitude_bits == 0 {
        return Err(CliError::Config("--magnitude-bits must be at least 1".into()));
    }
    if args.trials > 0 && args.max_n < 3 {
        return Err(CliError::Config("--max-N must be at least 3".into()));
    }
    let cfg = SweepConfig {
        trials: args.trials,
        max_len: args.max_n,
        magnitude_bits: args.magnitude_bits,
        seed: args.seed,
        cap: args.cap,
    };
    let report = run_all(&cfg);
    Ok(VerifyOutput {
        config: VerifyConfigRecord {
            trials: args.trials,
            max_n: args.max_n,
            magnitude_bits: args.magnitude_bits,
            seed: args.seed,
            cap: args.cap,
        },
        passed: report.passed(),
        report,
    })
}
