//! Executable checks of the greedy method's guarantees.
//!
//! * the greedy trace `q_1 <= q_2 <= ... <= q_n` never decreases;
//! * the z-array `z_i = x_i Σy - y_i Σx` sums to zero, so some entry is `<= 0`,
//!   and it vanishes identically only for proportional arrays;
//! * an optimal set whose element ratios are not all equal shares an index
//!   with the greedy set, and an optimal set with all-equal element ratios
//!   means the greedy value is optimal;
//! * for `n = 2` the greedy value is optimal.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Array, Error, Result};
use crate::greedy::greedy_select;
use crate::model::{compare_ratios, ExactInstance, ExactRatio, GreedyTrace, RatioValue, Scalar, Selection};
use crate::oracles::{brute_force_min, OracleResult};

/// The z-array of a pair of positive sequences and its sign pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct ZClassification {
    pub z: Vec<BigInt>,
    pub has_nonpositive: bool,
    pub all_zero: bool,
    /// `y_i / x_i`, present exactly when every `z_i` is zero.
    pub common_ratio: Option<ExactRatio>,
}

/// Computes `z_i = x_i * Σy - y_i * Σx`.
pub fn z_array(x: &[BigInt], y: &[BigInt]) -> Result<ZClassification> {
    if x.len() != y.len() {
        return Err(Error::MismatchedLengths {
            a: x.len(),
            b: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::TooShort { len: 0 });
    }
    for (array, values) in [(Array::A, x), (Array::B, y)] {
        if let Some(i) = values.iter().position(|v| !Signed::is_positive(v)) {
            return Err(Error::NonPositiveElement { array, index: i + 1 });
        }
    }
    let sum_x: BigInt = x.iter().sum();
    let sum_y: BigInt = y.iter().sum();
    let z: Vec<BigInt> = x
        .iter()
        .zip(y)
        .map(|(xi, yi)| xi * &sum_y - yi * &sum_x)
        .collect();
    let has_nonpositive = z.iter().any(|v| !Signed::is_positive(v));
    let all_zero = z.iter().all(Zero::is_zero);
    let common_ratio = all_zero.then(|| RatioValue::new(y[0].clone(), x[0].clone()));
    Ok(ZClassification {
        z,
        has_nonpositive,
        all_zero,
        common_ratio,
    })
}

/// True iff consecutive trace values never decrease.
pub fn check_monotone_trace<T: Scalar>(trace: &GreedyTrace<T>) -> bool {
    trace.q.windows(2).all(|w| compare_ratios(&w[0], &w[1]).is_le())
}

/// True iff `a_j / b_j` is the same for every `j` in `set`.
pub fn all_equal_ratios(instance: &ExactInstance, set: &[usize]) -> bool {
    let Some(&first) = set.first() else {
        return true;
    };
    let (a, b) = (instance.a(), instance.b());
    set.iter().all(|&j| &a[j] * &b[first] == &a[first] * &b[j])
}

/// Enough to regenerate an instance with [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InstanceDigest {
    pub seed: Option<u64>,
    pub len: usize,
    pub n: usize,
}

/// How a single verdict should be counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictOutcome {
    Pass,
    Violation,
    /// A failure of the all-equal-ratio branch on an instance that also has
    /// minimizers with unequal ratios.
    Finding,
}

/// Intersection theorem evaluated against one optimal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub minimizer: Vec<usize>,
    pub hypothesis_unequal_ratios: bool,
    pub intersection_nonempty: bool,
    pub greedy_exact: bool,
    /// Some other minimizer of the same instance has the opposite ratio pattern.
    pub mixed_minimizers: bool,
    pub instance_digest: InstanceDigest,
}

impl TheoremVerdict {
    pub fn outcome(&self) -> VerdictOutcome {
        if self.hypothesis_unequal_ratios {
            if self.intersection_nonempty {
                VerdictOutcome::Pass
            } else {
                VerdictOutcome::Violation
            }
        } else if self.greedy_exact {
            VerdictOutcome::Pass
        } else if self.mixed_minimizers {
            VerdictOutcome::Finding
        } else {
            VerdictOutcome::Violation
        }
    }
}

/// Builds one verdict per minimizer from solver outputs that were already computed.
pub fn theorem_verdicts(
    instance: &ExactInstance,
    greedy: &Selection<BigInt>,
    optimum: &OracleResult,
    seed: Option<u64>,
) -> Vec<TheoremVerdict> {
    let n = greedy.indices.len();
    let mut in_greedy = vec![false; instance.len()];
    for &i in &greedy.indices {
        in_greedy[i] = true;
    }
    let greedy_exact = compare_ratios(&greedy.value, &optimum.value).is_eq();
    let unequal: Vec<bool> = optimum
        .minimizers
        .iter()
        .map(|m| !all_equal_ratios(instance, m))
        .collect();
    let any_unequal = unequal.iter().any(|&u| u);
    let any_equal = unequal.iter().any(|&u| !u);
    optimum
        .minimizers
        .iter()
        .zip(&unequal)
        .map(|(m, &hypothesis)| TheoremVerdict {
            minimizer: m.clone(),
            hypothesis_unequal_ratios: hypothesis,
            intersection_nonempty: m.iter().any(|&j| in_greedy[j]),
            greedy_exact,
            mixed_minimizers: any_unequal && any_equal,
            instance_digest: InstanceDigest {
                seed,
                len: instance.len(),
                n,
            },
        })
        .collect()
}

/// Runs the greedy method and exhaustive search, then checks every minimizer.
pub fn check_intersection_theorem(
    instance: &ExactInstance,
    n: usize,
    cap: u64,
) -> Result<Vec<TheoremVerdict>> {
    let (greedy, _) = greedy_select(instance, n)?;
    let optimum = brute_force_min(instance, n, cap)?;
    Ok(theorem_verdicts(instance, &greedy, &optimum, None))
}

/// Two-element exactness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairVerdict {
    /// Some optimal pair has unequal element ratios.
    pub hypothesis_holds: bool,
    pub greedy_exact: bool,
}

impl PairVerdict {
    /// Exactness is required in both branches: directly under the hypothesis,
    /// and through the all-equal-ratio statement otherwise.
    pub fn passes(&self) -> bool {
        self.greedy_exact
    }
}

pub fn pair_verdict(
    instance: &ExactInstance,
    greedy: &Selection<BigInt>,
    optimum: &OracleResult,
) -> PairVerdict {
    PairVerdict {
        hypothesis_holds: optimum.minimizers.iter().any(|m| !all_equal_ratios(instance, m)),
        greedy_exact: compare_ratios(&greedy.value, &optimum.value).is_eq(),
    }
}

pub fn check_n2_exactness(instance: &ExactInstance, cap: u64) -> Result<PairVerdict> {
    let (greedy, _) = greedy_select(instance, 2)?;
    let optimum = brute_force_min(instance, 2, cap)?;
    Ok(pair_verdict(instance, &greedy, &optimum))
}

/// Seeded instance with integer elements drawn uniformly from `[1, 2^magnitude_bits]`.
///
/// The generator is ChaCha8 seeded through `seed_from_u64`. Each element takes
/// `ceil(bits / 32)` consecutive 32-bit outputs, assembled little-endian and
/// masked to `bits` bits, plus one. All of `a` is drawn before `b`. Output is
/// identical on every platform.
///
/// # Panics
///
/// If `len < 2` or `magnitude_bits == 0`.
pub fn random_instance(seed: u64, len: usize, magnitude_bits: u32) -> ExactInstance {
    assert!(len >= 2, "random_instance needs len >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_positive_vec(&mut rng, len, magnitude_bits);
    let b = random_positive_vec(&mut rng, len, magnitude_bits);
    ExactInstance::new(a, b).expect("generated elements are positive")
}

pub(crate) fn random_positive_vec(rng: &mut impl RngCore, len: usize, magnitude_bits: u32) -> Vec<BigInt> {
    (0..len).map(|_| random_positive(rng, magnitude_bits)).collect()
}

fn random_positive(rng: &mut impl RngCore, bits: u32) -> BigInt {
    assert!(bits >= 1, "magnitude_bits must be at least 1");
    let words: Vec<u32> = (0..bits.div_ceil(32)).map(|_| rng.next_u32()).collect();
    let mask = (BigUint::from(1u32) << bits) - 1u32;
    BigInt::from((BigUint::from_slice(&words) & mask) + 1u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::DEFAULT_ENUMERATION_CAP;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn counterexample() -> ExactInstance {
        ExactInstance::from_u64(&[1, 3, 6, 4], &[10, 3, 12, 6]).unwrap()
    }

    #[test]
    fn z_array_examples() {
        let z = z_array(&big(&[1, 2]), &big(&[2, 1])).unwrap();
        assert_eq!(z.z, big(&[-3, 3]));
        assert!(z.has_nonpositive && !z.all_zero && z.common_ratio.is_none());

        let z = z_array(&big(&[1, 2]), &big(&[2, 4])).unwrap();
        assert_eq!(z.z, big(&[0, 0]));
        assert!(z.all_zero);
        assert!(z
            .common_ratio
            .unwrap()
            .is_identical(&RatioValue::new(BigInt::from(2), BigInt::from(1))));

        let z = z_array(&big(&[5]), &big(&[7])).unwrap();
        assert_eq!(z.z, big(&[0]));
        assert!(z
            .common_ratio
            .unwrap()
            .is_identical(&RatioValue::new(BigInt::from(7), BigInt::from(5))));
    }

    #[test]
    fn z_array_validation() {
        assert!(matches!(
            z_array(&big(&[1]), &big(&[1, 2])),
            Err(Error::MismatchedLengths { .. })
        ));
        assert_eq!(z_array(&[], &[]), Err(Error::TooShort { len: 0 }));
        assert_eq!(
            z_array(&big(&[1, 0]), &big(&[1, 1])),
            Err(Error::NonPositiveElement {
                array: Array::A,
                index: 2
            })
        );
    }

    #[test]
    fn monotone_trace_and_negative_control() {
        let (_, trace) = greedy_select(&counterexample(), 3).unwrap();
        assert!(check_monotone_trace(&trace));
        let (_, single) = greedy_select(&counterexample(), 1).unwrap();
        assert!(check_monotone_trace(&single));
        let mut mutated = trace.clone();
        mutated.q.swap(0, 2);
        assert!(!check_monotone_trace(&mutated));
    }

    #[test]
    fn intersection_on_counterexample() {
        let verdicts = check_intersection_theorem(&counterexample(), 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(verdicts.len(), 1);
        let v = &verdicts[0];
        assert_eq!(v.minimizer, vec![0, 2, 3]);
        assert!(v.hypothesis_unequal_ratios && v.intersection_nonempty && !v.greedy_exact);
        assert_eq!(v.outcome(), VerdictOutcome::Pass);
    }

    #[test]
    fn intersection_on_worked_example() {
        let inst = ExactInstance::from_u64(&[3, 2, 5, 7], &[6, 2, 2, 8]).unwrap();
        let verdicts = check_intersection_theorem(&inst, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(verdicts.len(), 1);
        assert!(verdicts[0].hypothesis_unequal_ratios && verdicts[0].intersection_nonempty);
        assert_eq!(verdicts[0].outcome(), VerdictOutcome::Pass);
    }

    #[test]
    fn constant_ratio_uses_exactness_branch() {
        let b = [3u64, 1, 4, 1, 5];
        let a: Vec<u64> = b.iter().map(|x| 2 * x).collect();
        let inst = ExactInstance::from_u64(&a, &b).unwrap();
        let verdicts = check_intersection_theorem(&inst, 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(verdicts.len(), 10);
        for v in verdicts {
            assert!(!v.hypothesis_unequal_ratios && v.greedy_exact);
            assert_eq!(v.outcome(), VerdictOutcome::Pass);
        }
        let pair = check_n2_exactness(&inst, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(!pair.hypothesis_holds && pair.passes());
    }

    #[test]
    fn verdict_outcomes() {
        let base = TheoremVerdict {
            minimizer: vec![0],
            hypothesis_unequal_ratios: true,
            intersection_nonempty: false,
            greedy_exact: false,
            mixed_minimizers: false,
            instance_digest: InstanceDigest {
                seed: None,
                len: 3,
                n: 2,
            },
        };
        assert_eq!(base.outcome(), VerdictOutcome::Violation);
        let equal = TheoremVerdict {
            hypothesis_unequal_ratios: false,
            ..base.clone()
        };
        assert_eq!(equal.outcome(), VerdictOutcome::Violation);
        let mixed = TheoremVerdict {
            mixed_minimizers: true,
            ..equal
        };
        assert_eq!(mixed.outcome(), VerdictOutcome::Finding);
    }

    #[test]
    fn pair_exactness_examples() {
        let inst = ExactInstance::from_u64(&[3, 2, 5, 7], &[6, 2, 2, 8]).unwrap();
        let v = check_n2_exactness(&inst, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(v.hypothesis_holds && v.passes());
        let v = check_n2_exactness(&counterexample(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(v.hypothesis_holds && v.passes());
    }

    #[test]
    fn random_instance_is_reproducible() {
        let first = random_instance(1, 4, 4);
        assert_eq!(first, random_instance(1, 4, 4));
        assert_eq!(
            first,
            ExactInstance::from_u64(&FROZEN_A, &FROZEN_B).unwrap(),
            "generator output changed"
        );
        let other = random_instance(2, 4, 4);
        assert_eq!(other.len(), 4);
        for v in first.a().iter().chain(first.b()) {
            assert!(*v >= BigInt::from(1) && *v <= BigInt::from(16));
        }
    }

    #[test]
    fn wide_magnitudes() {
        let inst = random_instance(7, 5, 100);
        let limit = BigInt::from(1) << 100u32;
        assert!(inst.a().iter().all(|v| Signed::is_positive(v) && *v <= limit));
        assert!(inst.a().iter().any(|v| v.bits() > 64));
    }

    const FROZEN_A: [u64; 4] = [2, 11, 12, 9];
    const FROZEN_B: [u64; 4] = [6, 4, 3, 13];
}
