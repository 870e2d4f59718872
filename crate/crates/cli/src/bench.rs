//! `bench`: wall-clock scaling of the solvers on seeded random instances.
//!
//! Instances hold integers in `[1, 2^20]`, so the float and exact paths see
//! the same problem and float sums stay exact well past `N = 10^6`.

use std::fmt::Write as _;
use std::hint::black_box;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratiosel_core::combinations::binomial;
use ratiosel_core::{brute_force_min, greedy_select, ExactInstance, FloatInstance, DEFAULT_ENUMERATION_CAP};
use serde::Serialize;

use crate::error::CliError;
use crate::solve::Arithmetic;

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Ascending array lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    /// Arithmetic for the greedy solver.
    #[arg(long, value_enum, default_value = "float")]
    pub arithmetic: Arithmetic,
    /// Also time exhaustive search wherever C(N, n) fits under the cap.
    #[arg(long)]
    pub brute: bool,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub len: usize,
    pub n: usize,
    pub solver: &'static str,
    pub arithmetic: Arithmetic,
    pub repeats: usize,
    pub median_ms: f64,
    pub min_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumerated: Option<u64>,
    /// Median time over the median of the previous size for the same solver.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_to_previous: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>10} {:>6} {:>8} {:>6} {:>12} {:>12} {:>12} {:>8}",
            "N", "n", "solver", "arith", "median_ms", "min_ms", "enumerated", "ratio"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>10} {:>6} {:>8} {:>6} {:>12.3} {:>12.3} {:>12} {:>8}",
                r.len,
                r.n,
                r.solver,
                match r.arithmetic {
                    Arithmetic::Exact => "exact",
                    Arithmetic::Float => "float",
                },
                r.median_ms,
                r.min_ms,
                r.enumerated.map_or("-".to_string(), |e| e.to_string()),
                r.ratio_to_previous.map_or("-".to_string(), |x| format!("{x:.2}")),
            );
        }
        out
    }
}

/// Integer-valued random arrays in `[1, 2^20]`, identical for equal arguments.
pub fn bench_arrays(seed: u64, len: usize) -> (Vec<u64>, Vec<u64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (len as u64).rotate_left(32));
    let mut draw = || {
        (0..len)
            .map(|_| rng.random_range(1..=1u64 << 20))
            .collect::<Vec<_>>()
    };
    let a = draw();
    let b = draw();
    (a, b)
}

pub fn float_bench_instance(seed: u64, len: usize) -> FloatInstance {
    let (a, b) = bench_arrays(seed, len);
    FloatInstance::new(
        a.into_iter().map(|x| x as f64).collect(),
        b.into_iter().map(|x| x as f64).collect(),
    )
    .expect("positive by construction")
}

pub fn exact_bench_instance(seed: u64, len: usize) -> ExactInstance {
    let (a, b) = bench_arrays(seed, len);
    ExactInstance::from_u64(&a, &b).expect("positive by construction")
}

/// Median and minimum wall time in milliseconds.
pub fn time_runs<F: FnMut()>(repeats: usize, mut run: F) -> (f64, f64) {
    let mut times: Vec<f64> = (0..repeats)
        .map(|_| {
            let start = Instant::now();
            run();
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    let mid = times.len() / 2;
    let median = if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2.0
    };
    (median, times[0])
}

fn validate(args: &BenchArgs) -> Result<(), CliError> {
    if args.sizes.is_empty() {
        return Err(CliError::Config("--sizes must not be empty".into()));
    }
    if args.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Config("--sizes must be strictly ascending".into()));
    }
    if args.n == 0 || args.n >= args.sizes[0] {
        return Err(CliError::Config(format!(
            "--n must satisfy 1 <= n < {} (the smallest size)",
            args.sizes[0]
        )));
    }
    if args.repeats == 0 {
        return Err(CliError::Config("--repeats must be at least 1".into()));
    }
    Ok(())
}

pub fn bench(args: &BenchArgs) -> Result<BenchTable, CliError> {
    validate(args)?;
    let mut rows = Vec::new();
    let mut prev_greedy: Option<f64> = None;
    let mut prev_brute: Option<f64> = None;
    for &len in &args.sizes {
        let (median, min) = match args.arithmetic {
            Arithmetic::Float => {
                let inst = float_bench_instance(args.seed, len);
                time_runs(args.repeats, || {
                    black_box(greedy_select(black_box(&inst), args.n).expect("validated"));
                })
            }
            Arithmetic::Exact => {
                let inst = exact_bench_instance(args.seed, len);
                time_runs(args.repeats, || {
                    black_box(greedy_select(black_box(&inst), args.n).expect("validated"));
                })
            }
        };
        rows.push(BenchRow {
            len,
            n: args.n,
            solver: "greedy",
            arithmetic: args.arithmetic,
            repeats: args.repeats,
            median_ms: median,
            min_ms: min,
            enumerated: None,
            ratio_to_previous: prev_greedy.map(|p| median / p),
        });
        prev_greedy = Some(median);

        let fits = binomial(len, args.n) <= args.cap.into();
        if args.brute && fits {
            let inst = exact_bench_instance(args.seed, len);
            let mut enumerated = 0;
            let (median, min) = time_runs(args.repeats, || {
                let res = brute_force_min(black_box(&inst), args.n, args.cap).expect("validated");
                enumerated = res.enumerated;
                black_box(res);
            });
            rows.push(BenchRow {
                len,
                n: args.n,
                solver: "brute",
                arithmetic: Arithmetic::Exact,
                repeats: args.repeats,
                median_ms: median,
                min_ms: min,
                enumerated: Some(enumerated),
                ratio_to_previous: prev_brute.map(|p| median / p),
            });
            prev_brute = Some(median);
        }
    }
    Ok(BenchTable { rows })
}
