//! `solve`: run one solver on a CSV instance.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use ratiosel_core::decimal::NormalizedInstance;
use ratiosel_core::{
    brute_force_min, dinkelbach_min, greedy_select, reduced_search_min, BigInt, GreedyTrace, RatioValue,
    Selection, DEFAULT_ENUMERATION_CAP,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::io::{load_float_instance, load_instance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Greedy,
    Brute,
    Reduced,
    Dinkelbach,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    Float,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    /// CSV file with header `a,b`, one row per index.
    #[arg(long)]
    pub input: PathBuf,
    /// Number of indices to select.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "greedy")]
    pub mode: Mode,
    /// `float` is only available for the greedy solver.
    #[arg(long, value_enum, default_value = "exact")]
    pub arithmetic: Arithmetic,
    /// Enumeration cap for brute and reduced search.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRecord {
    pub num: String,
    pub den: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    /// 1-based index picked at this iteration.
    pub index: usize,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub mode: Mode,
    pub arithmetic: Arithmetic,
    pub len: usize,
    pub n: usize,
    /// 1-based, ascending.
    pub indices: Vec<usize>,
    pub ratio: RatioRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
    /// Greedy: some iteration had several best candidates.
    /// Brute and reduced: several optimal sets were found.
    pub ties_encountered: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumerated: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimizers: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    pub timing_ms: f64,
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn exact_ratio(norm: &NormalizedInstance, r: &RatioValue<BigInt>) -> RatioRecord {
    RatioRecord {
        num: norm.unscale(&r.num),
        den: norm.unscale(&r.den),
        value: r.to_f64(),
    }
}

fn float_ratio(r: &RatioValue<f64>) -> RatioRecord {
    RatioRecord {
        num: r.num.to_string(),
        den: r.den.to_string(),
        value: r.to_f64(),
    }
}

pub fn solve(args: &SolveArgs) -> Result<SolveReport, CliError> {
    if args.arithmetic == Arithmetic::Float {
        if args.mode != Mode::Greedy {
            return Err(CliError::Config(
                "float arithmetic is only available for --mode greedy".into(),
            ));
        }
        return solve_float(args);
    }
    let norm = load_instance(&args.input)?;
    let inst = &norm.instance;
    let start = Instant::now();
    let mut report = SolveReport {
        mode: args.mode,
        arithmetic: Arithmetic::Exact,
        len: inst.len(),
        n: args.n,
        indices: Vec::new(),
        ratio: RatioRecord {
            num: String::new(),
            den: String::new(),
            value: 0.0,
        },
        trace: None,
        ties_encountered: false,
        enumerated: None,
        minimizers: None,
        iterations: None,
        timing_ms: 0.0,
    };
    let selection: Selection<BigInt> = match args.mode {
        Mode::Greedy => {
            let (sel, trace) = greedy_select(inst, args.n)?;
            report.ties_encountered = trace.ties_encountered;
            report.trace = Some(trace_entries(&trace, |r| exact_ratio(&norm, r)));
            sel
        }
        Mode::Brute | Mode::Reduced => {
            let res = if args.mode == Mode::Brute {
                brute_force_min(inst, args.n, args.cap)?
            } else {
                let (greedy, _) = greedy_select(inst, args.n)?;
                reduced_search_min(inst, args.n, &greedy.indices, args.cap)?
            };
            report.ties_encountered = res.minimizers.len() > 1;
            report.enumerated = Some(res.enumerated);
            report.minimizers = Some(res.minimizers.iter().map(|m| one_based(m)).collect());
            res.selection()
        }
        Mode::Dinkelbach => {
            let out = dinkelbach_min(inst, args.n)?;
            report.iterations = Some(out.iterations);
            report.enumerated = Some(out.result.enumerated);
            out.result.selection()
        }
    };
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    report.indices = selection.one_based();
    report.ratio = exact_ratio(&norm, &selection.value);
    Ok(report)
}

fn solve_float(args: &SolveArgs) -> Result<SolveReport, CliError> {
    let inst = load_float_instance(&args.input)?;
    let start = Instant::now();
    let (sel, trace) = greedy_select(&inst, args.n)?;
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(SolveReport {
        mode: Mode::Greedy,
        arithmetic: Arithmetic::Float,
        len: inst.len(),
        n: args.n,
        indices: sel.one_based(),
        ratio: float_ratio(&sel.value),
        trace: Some(trace_entries(&trace, float_ratio)),
        ties_encountered: trace.ties_encountered,
        enumerated: None,
        minimizers: None,
        iterations: None,
        timing_ms,
    })
}

fn trace_entries<T, F>(trace: &GreedyTrace<T>, mut fmt: F) -> Vec<TraceEntry>
where
    T: ratiosel_core::Scalar,
    F: FnMut(&RatioValue<T>) -> RatioRecord,
{
    trace
        .picks
        .iter()
        .zip(&trace.q)
        .map(|(&index, q)| {
            let r = fmt(q);
            TraceEntry {
                index: index + 1,
                num: r.num,
                den: r.den,
            }
        })
        .collect()
}
