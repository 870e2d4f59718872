//! Seeded property sweeps and their aggregated report.
//!
//! Each sweep draws per-trial seeds from one ChaCha8 stream, so a violation
//! can be regenerated from `(seed, len, magnitude_bits)` alone. Trials run in
//! parallel; tallies live in ordered maps and violation lists are sorted, so
//! the report does not depend on the worker count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::greedy::greedy_select;
use crate::model::{compare_ratios, ExactInstance};
use crate::oracles::{brute_force_min, dinkelbach_min, reduced_search_min, search_space_counts};
use crate::theory::{
    check_monotone_trace, pair_verdict, random_instance, random_positive_vec, theorem_verdicts, z_array,
    VerdictOutcome,
};

pub const TRACE_MONOTONE: &str = "greedy_trace_monotone";
pub const GREEDY_PREFIX: &str = "greedy_prefix_consistency";
pub const Z_ZERO_SUM: &str = "z_zero_sum";
pub const Z_NONPOSITIVE: &str = "z_nonpositive_element";
pub const Z_COMMON_RATIO: &str = "z_common_ratio";
pub const MINIMIZER_MEETS_GREEDY: &str = "minimizer_meets_greedy_set";
pub const EQUAL_RATIO_EXACT: &str = "equal_ratio_greedy_exact";
pub const PAIR_EXACT: &str = "pair_greedy_exact";
pub const GREEDY_NOT_BELOW_OPTIMUM: &str = "greedy_not_below_optimum";
pub const DINKELBACH_AGREES: &str = "dinkelbach_agrees_with_brute";
pub const DINKELBACH_DECREASING: &str = "dinkelbach_strictly_decreasing";
pub const REDUCED_AGREES: &str = "reduced_agrees_with_brute";
pub const REDUCED_COUNT: &str = "reduced_enumeration_count";
pub const NEGATIVE_CONTROL: &str = "negative_control_detects_inexactness";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub trials: usize,
    /// Largest array length drawn.
    pub max_len: usize,
    pub magnitude_bits: u32,
    pub seed: u64,
    /// Enumeration cap for the exhaustive oracles; larger cases are skipped.
    pub cap: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            trials: 100,
            max_len: 12,
            magnitude_bits: 8,
            seed: 0,
            cap: crate::oracles::DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
}

/// A failing or noteworthy case, serialized with enough data to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub property: String,
    pub seed: u64,
    pub len: usize,
    pub n: Option<usize>,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub properties: BTreeMap<String, PropertyTally>,
    pub violations: Vec<CaseRecord>,
    pub findings: Vec<CaseRecord>,
    /// (instance, n) pairs left out because the enumeration cap was exceeded.
    pub skipped_by_cap: u64,
    /// (instance, n) pairs whose greedy run hit an argmin tie.
    pub greedy_ties: u64,
}

impl VerificationReport {
    /// No property failed.
    pub fn passed(&self) -> bool {
        self.properties.values().all(|t| t.failed == 0)
    }

    pub fn tally(&self, name: &str) -> PropertyTally {
        self.properties.get(name).copied().unwrap_or_default()
    }

    fn record(&mut self, name: &str, ok: bool) {
        let t = self.properties.entry(name.to_string()).or_default();
        t.checked += 1;
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
    }

    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        for (name, t) in other.properties {
            let mine = self.properties.entry(name).or_default();
            mine.checked += t.checked;
            mine.passed += t.passed;
            mine.failed += t.failed;
        }
        self.violations.extend(other.violations);
        self.findings.extend(other.findings);
        self.skipped_by_cap += other.skipped_by_cap;
        self.greedy_ties += other.greedy_ties;
        self
    }

    fn finish(mut self) -> Self {
        let key = |c: &CaseRecord| (c.property.clone(), c.seed, c.len, c.n, c.detail.clone());
        self.violations.sort_by_key(key);
        self.findings.sort_by_key(key);
        self
    }
}

fn case(property: &str, seed: u64, instance: &ExactInstance, n: Option<usize>, detail: String) -> CaseRecord {
    CaseRecord {
        property: property.to_string(),
        seed,
        len: instance.len(),
        n,
        a: instance.a().iter().map(ToString::to_string).collect(),
        b: instance.b().iter().map(ToString::to_string).collect(),
        detail,
    }
}

fn trial_seeds(base: u64, stream: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    rng.set_stream(stream);
    (0..trials).map(|_| rng.next_u64()).collect()
}

/// Side generator for trial shapes (lengths, sampled n), independent of the instance stream.
fn shape_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    rng
}

fn run_trials<F>(seeds: Vec<u64>, per_trial: F) -> VerificationReport
where
    F: Fn(u64) -> VerificationReport + Sync + Send,
{
    seeds
        .into_par_iter()
        .map(per_trial)
        .reduce(VerificationReport::default, VerificationReport::merge)
        .finish()
}

/// Greedy traces never decrease, and shorter runs are prefixes of longer ones.
///
/// Each trial runs the greedy method to `n = N - 1`, which covers every
/// smaller `n` through prefix consistency, and re-runs one sampled `n` to
/// check that consistency.
pub fn monotonicity_sweep(cfg: &SweepConfig) -> VerificationReport {
    let max_len = cfg.max_len.max(2);
    run_trials(trial_seeds(cfg.seed, 11, cfg.trials), |seed| {
        let mut report = VerificationReport::default();
        let mut shape = shape_rng(seed);
        let len = shape.random_range(2..=max_len);
        let sampled_n = shape.random_range(1..len);
        let instance = random_instance(seed, len, cfg.magnitude_bits);
        let (_, full) = greedy_select(&instance, len - 1).expect("valid size");
        if full.ties_encountered {
            report.greedy_ties += 1;
        }
        let monotone = check_monotone_trace(&full);
        report.record(TRACE_MONOTONE, monotone);
        if !monotone {
            report.violations.push(case(
                TRACE_MONOTONE,
                seed,
                &instance,
                Some(len - 1),
                "trace decreases".into(),
            ));
        }
        let (_, partial) = greedy_select(&instance, sampled_n).expect("valid size");
        let prefix = partial.picks[..] == full.picks[..sampled_n]
            && partial.q.iter().zip(&full.q).all(|(p, f)| p.is_identical(f));
        report.record(GREEDY_PREFIX, prefix);
        if !prefix {
            report.violations.push(case(
                GREEDY_PREFIX,
                seed,
                &instance,
                Some(sampled_n),
                "prefix differs".into(),
            ));
        }
        report
    })
}

/// z-array sums to zero, has a non-positive entry, and vanishes only for proportional pairs.
///
/// Every fourth trial draws a proportional pair `(q·w, p·w)` so the all-zero
/// branch is exercised.
pub fn z_array_sweep(cfg: &SweepConfig) -> VerificationReport {
    let max_len = cfg.max_len.max(1);
    let seeds = trial_seeds(cfg.seed, 12, cfg.trials);
    let indexed: Vec<(usize, u64)> = seeds.into_iter().enumerate().collect();
    indexed
        .into_par_iter()
        .map(|(k, seed)| {
            let mut report = VerificationReport::default();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let len = shape_rng(seed).random_range(1..=max_len);
            let proportional = k % 4 == 3;
            let (x, y) = if proportional {
                let w = random_positive_vec(&mut rng, len, cfg.magnitude_bits);
                let pq = random_positive_vec(&mut rng, 2, cfg.magnitude_bits);
                (
                    w.iter().map(|v| v * &pq[1]).collect::<Vec<_>>(),
                    w.iter().map(|v| v * &pq[0]).collect::<Vec<_>>(),
                )
            } else {
                (
                    random_positive_vec(&mut rng, len, cfg.magnitude_bits),
                    random_positive_vec(&mut rng, len, cfg.magnitude_bits),
                )
            };
            let zc = z_array(&x, &y).expect("generated values are positive");
            let as_instance = || CaseRecord {
                property: String::new(),
                seed,
                len,
                n: None,
                a: x.iter().map(ToString::to_string).collect(),
                b: y.iter().map(ToString::to_string).collect(),
                detail: String::new(),
            };
            let check = |report: &mut VerificationReport, name: &str, ok: bool, detail: &str| {
                report.record(name, ok);
                if !ok {
                    report.violations.push(CaseRecord {
                        property: name.to_string(),
                        detail: detail.to_string(),
                        ..as_instance()
                    });
                }
            };
            let sum: BigInt = zc.z.iter().sum();
            check(&mut report, Z_ZERO_SUM, sum.is_zero(), "z does not sum to zero");
            let min_nonpositive = zc.z.iter().any(|v| *v <= BigInt::zero());
            check(
                &mut report,
                Z_NONPOSITIVE,
                min_nonpositive && zc.has_nonpositive,
                "no non-positive entry",
            );
            let no_negative = zc.z.iter().all(|v| *v >= BigInt::zero());
            if no_negative || proportional {
                let common = zc.all_zero
                    && zc.common_ratio.is_some()
                    && x.iter().zip(&y).all(|(xi, yi)| yi * &x[0] == &y[0] * xi);
                check(&mut report, Z_COMMON_RATIO, common, "no common ratio");
            }
            report
        })
        .reduce(VerificationReport::default, VerificationReport::merge)
        .finish()
}

/// Intersection theorem, pair exactness and oracle agreement over every `2 <= n < N`.
pub fn exhaustive_sweep(cfg: &SweepConfig) -> VerificationReport {
    let max_len = cfg.max_len.max(3);
    run_trials(trial_seeds(cfg.seed, 13, cfg.trials), |seed| {
        let mut report = VerificationReport::default();
        let len = shape_rng(seed).random_range(3..=max_len);
        let instance = random_instance(seed, len, cfg.magnitude_bits);
        for n in 2..len {
            check_instance(&mut report, &instance, n, seed, cfg.cap);
        }
        report
    })
}

fn check_instance(report: &mut VerificationReport, instance: &ExactInstance, n: usize, seed: u64, cap: u64) {
    let optimum = match brute_force_min(instance, n, cap) {
        Ok(o) => o,
        Err(Error::EnumerationCapExceeded { .. }) => {
            report.skipped_by_cap += 1;
            return;
        }
        Err(e) => panic!("brute force failed on a valid instance: {e}"),
    };
    let (greedy, trace) = greedy_select(instance, n).expect("valid size");
    if trace.ties_encountered {
        report.greedy_ties += 1;
    }
    let check = |report: &mut VerificationReport, name: &str, ok: bool, detail: String| {
        report.record(name, ok);
        if !ok {
            report
                .violations
                .push(case(name, seed, instance, Some(n), detail));
        }
    };

    check(
        report,
        GREEDY_NOT_BELOW_OPTIMUM,
        compare_ratios(&greedy.value, &optimum.value).is_ge(),
        format!("greedy {} below optimum {}", greedy.value, optimum.value),
    );

    for verdict in theorem_verdicts(instance, &greedy, &optimum, Some(seed)) {
        let name = if verdict.hypothesis_unequal_ratios {
            MINIMIZER_MEETS_GREEDY
        } else {
            EQUAL_RATIO_EXACT
        };
        let detail = format!(
            "minimizer {:?} vs greedy {:?}",
            one_based(&verdict.minimizer),
            greedy.one_based()
        );
        match verdict.outcome() {
            VerdictOutcome::Pass => report.record(name, true),
            VerdictOutcome::Violation => check(report, name, false, detail),
            VerdictOutcome::Finding => report.findings.push(case(name, seed, instance, Some(n), detail)),
        }
    }

    if n == 2 {
        let pair = pair_verdict(instance, &greedy, &optimum);
        check(
            report,
            PAIR_EXACT,
            pair.passes(),
            format!("greedy {} vs optimum {}", greedy.value, optimum.value),
        );
    }

    let dink = dinkelbach_min(instance, n).expect("valid size");
    check(
        report,
        DINKELBACH_AGREES,
        compare_ratios(&dink.result.value, &optimum.value).is_eq(),
        format!("dinkelbach {} vs brute {}", dink.result.value, optimum.value),
    );
    check(
        report,
        DINKELBACH_DECREASING,
        dink.lambdas
            .windows(2)
            .all(|w| compare_ratios(&w[1], &w[0]).is_lt()),
        "parameter sequence not strictly decreasing".into(),
    );

    match reduced_search_min(instance, n, &greedy.indices, cap) {
        Ok(reduced) => {
            check(
                report,
                REDUCED_AGREES,
                compare_ratios(&reduced.value, &optimum.value).is_eq(),
                format!("reduced {} vs brute {}", reduced.value, optimum.value),
            );
            let (_, expected) = search_space_counts(instance.len(), n).expect("valid size");
            check(
                report,
                REDUCED_COUNT,
                expected == reduced.enumerated.into(),
                format!("enumerated {} expected {}", reduced.enumerated, expected),
            );
            let outside: Vec<_> = optimum
                .minimizers
                .iter()
                .filter(|m| !reduced.minimizers.contains(m))
                .map(|m| one_based(m))
                .collect();
            if !outside.is_empty() {
                report.findings.push(case(
                    "minimizer_outside_reduced_family",
                    seed,
                    instance,
                    Some(n),
                    format!("{outside:?}"),
                ));
            }
        }
        Err(Error::EnumerationCapExceeded { .. }) => report.skipped_by_cap += 1,
        Err(e) => panic!("reduced search failed on a valid instance: {e}"),
    }
}

fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

/// The greedy method must be observably suboptimal on the known counterexample.
pub fn negative_control() -> VerificationReport {
    let mut report = VerificationReport::default();
    let instance = ExactInstance::from_u64(&[1, 3, 6, 4], &[10, 3, 12, 6]).expect("valid");
    let (greedy, _) = greedy_select(&instance, 3).expect("valid size");
    let optimum = brute_force_min(&instance, 3, u64::MAX).expect("4 sets");
    let detected = compare_ratios(&greedy.value, &optimum.value).is_gt();
    report.record(NEGATIVE_CONTROL, detected);
    if !detected {
        report.violations.push(case(
            NEGATIVE_CONTROL,
            0,
            &instance,
            Some(3),
            "greedy matched the optimum".into(),
        ));
    }
    report
}

/// Every sweep with the same configuration; the negative control runs when `trials > 0`.
pub fn run_all(cfg: &SweepConfig) -> VerificationReport {
    let mut report = monotonicity_sweep(cfg)
        .merge(z_array_sweep(cfg))
        .merge(exhaustive_sweep(cfg));
    if cfg.trials > 0 {
        report = report.merge(negative_control());
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            trials: 40,
            max_len: 8,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let report = run_all(&small());
        assert!(report.passed(), "{:#?}", report.violations);
        assert_eq!(report.tally(TRACE_MONOTONE).checked, 40);
        assert_eq!(report.tally(Z_ZERO_SUM).checked, 40);
        assert!(report.tally(Z_COMMON_RATIO).checked >= 10);
        assert!(report.tally(MINIMIZER_MEETS_GREEDY).checked > 0);
        assert_eq!(report.tally(NEGATIVE_CONTROL).passed, 1);
        assert_eq!(report.skipped_by_cap, 0);
    }

    #[test]
    fn empty_config_gives_empty_report() {
        let report = run_all(&SweepConfig {
            trials: 0,
            ..SweepConfig::default()
        });
        assert!(report.properties.is_empty() && report.passed());
    }

    #[test]
    fn cap_skips_instead_of_failing() {
        let report = exhaustive_sweep(&SweepConfig {
            trials: 5,
            max_len: 12,
            cap: 10,
            ..SweepConfig::default()
        });
        assert!(report.skipped_by_cap > 0);
        assert!(report.passed());
    }

    #[test]
    fn deterministic_across_runs() {
        assert_eq!(run_all(&small()), run_all(&small()));
    }
}
