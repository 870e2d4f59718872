//! `gappy`: greedy sample-row selection for a one-dimensional gappy reconstruction.

use std::path::PathBuf;

use clap::Args;
use ratiosel_core::gappy::gappy_solve;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::io::{load_matrix, load_vector};

#[derive(Debug, Clone, Args)]
pub struct GappyArgs {
    /// Unit vector `u`, one entry per line.
    #[arg(long)]
    pub u: PathBuf,
    /// Orthonormal complement `Û`, one row per line.
    #[arg(long)]
    pub uhat: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GappyReport {
    pub len: usize,
    pub cols: usize,
    pub n: usize,
    /// 1-based, ascending.
    pub selection: Vec<usize>,
    /// 1-based, in pick order.
    pub picks: Vec<usize>,
    pub lhs: f64,
    pub rhs: f64,
    pub rhs_squared: f64,
    pub ratio: f64,
    pub ratio_identity_error: f64,
    pub bound_holds: bool,
    pub identity_holds: bool,
}

pub fn gappy(args: &GappyArgs) -> Result<GappyReport, CliError> {
    let u = load_vector(&args.u)?;
    let uhat = load_matrix(&args.uhat)?;
    let sol = gappy_solve(&u, &uhat, args.n)?;
    let r = &sol.report;
    Ok(GappyReport {
        len: u.len(),
        cols: uhat.ncols(),
        n: args.n,
        selection: sol.selection.one_based(),
        picks: sol.trace.picks.iter().map(|i| i + 1).collect(),
        lhs: r.lhs,
        rhs: r.rhs,
        rhs_squared: r.rhs * r.rhs,
        ratio: r.ratio,
        ratio_identity_error: r.ratio_identity_error,
        bound_holds: r.bound_holds(),
        identity_holds: r.identity_holds(),
    })
}
