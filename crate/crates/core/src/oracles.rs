//! Exact reference solvers.
//!
//! * [`brute_force_min`] enumerates all `C(N, n)` subsets and reports every minimizer.
//! * [`reduced_search_min`] enumerates only subsets sharing an index with a
//!   greedy set, `C(N, n) - C(N - n, n)` of them.
//! * [`dinkelbach_min`] solves the parametric problem `min Σ(a_i - λ b_i)`
//!   repeatedly, which for a cardinality constraint is a sort.
//!
//! All three work on [`ExactInstance`] only.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::combinations::{binomial, SumWalker};
use crate::error::{Error, Result};
use crate::greedy::greedy_select;
use crate::model::{ExactInstance, ExactRatio, RatioValue, Scalar, Selection, SolverKind};

/// Default limit on the number of candidate sets an enumerating oracle may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Every optimal set found, each sorted, listed in lexicographic order.
    pub minimizers: Vec<Vec<usize>>,
    pub value: ExactRatio,
    /// Number of candidate sets examined.
    pub enumerated: u64,
    pub solver: SolverKind,
}

impl OracleResult {
    /// The lexicographically first minimizer as a [`Selection`].
    pub fn selection(&self) -> Selection<BigInt> {
        Selection::new(self.minimizers[0].clone(), self.value.clone(), self.solver)
    }
}

/// Full and theorem-reduced search-space sizes for `n` of `N`.
pub fn search_space_counts(len: usize, n: usize) -> Result<(BigUint, BigUint)> {
    if n == 0 || n >= len {
        return Err(Error::InvalidSubsetSize { n, len });
    }
    let full = binomial(len, n);
    // binomial() is already zero when n > len - n.
    let disjoint = binomial(len - n, n);
    let reduced = &full - disjoint;
    Ok((full, reduced))
}

fn check_cap(count: &BigUint, cap: u64) -> Result<u64> {
    match count.to_u64() {
        Some(c) if c <= cap => Ok(c),
        _ => Err(Error::EnumerationCapExceeded {
            count: count.clone(),
            cap,
        }),
    }
}

struct Tracker {
    best: Option<(BigInt, BigInt)>,
    minimizers: Vec<Vec<usize>>,
    visited: u64,
}

impl Tracker {
    fn new() -> Self {
        Tracker {
            best: None,
            minimizers: Vec::new(),
            visited: 0,
        }
    }

    fn offer(&mut self, num: &BigInt, den: &BigInt, members: impl Iterator<Item = usize>) {
        self.visited += 1;
        let ord = match &self.best {
            None => std::cmp::Ordering::Less,
            Some((bn, bd)) => BigInt::cross_cmp(num, den, bn, bd),
        };
        match ord {
            std::cmp::Ordering::Less => {
                self.best = Some((num.clone(), den.clone()));
                self.minimizers.clear();
                self.minimizers.push(sorted(members));
            }
            std::cmp::Ordering::Equal => self.minimizers.push(sorted(members)),
            std::cmp::Ordering::Greater => {}
        }
    }

    fn finish(mut self, solver: SolverKind) -> OracleResult {
        let (num, den) = self.best.expect("at least one candidate set");
        self.minimizers.sort();
        OracleResult {
            minimizers: self.minimizers,
            value: RatioValue::new(num, den),
            enumerated: self.visited,
            solver,
        }
    }
}

fn sorted(members: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = members.collect();
    v.sort_unstable();
    v
}

/// Exhaustive search over all `C(N, n)` subsets.
pub fn brute_force_min(instance: &ExactInstance, n: usize, cap: u64) -> Result<OracleResult> {
    let (full, _) = search_space_counts(instance.len(), n)?;
    check_cap(&full, cap)?;
    let pool: Vec<usize> = (0..instance.len()).collect();
    let mut walker = SumWalker::new(instance, &pool, n, Zero::zero(), Zero::zero());
    let mut tracker = Tracker::new();
    while !walker.is_done() {
        tracker.offer(walker.num(), walker.den(), walker.members());
        walker.advance();
    }
    Ok(tracker.finish(SolverKind::Brute))
}

/// Exhaustive search restricted to subsets that intersect `greedy_set`.
///
/// Subsets are grouped by their smallest member of the (sorted) greedy set
/// `g`: the group for `g[k]` contains `g[k]`, avoids `g[0..k]`, and picks the
/// remaining `n - 1` indices from everything else. The groups partition the
/// reduced family without repeats.
///
/// The reported value is the global optimum whenever the greedy set came from
/// [`greedy_select`]. Optimal sets disjoint from the greedy set are not listed.
pub fn reduced_search_min(
    instance: &ExactInstance,
    n: usize,
    greedy_set: &[usize],
    cap: u64,
) -> Result<OracleResult> {
    let (_, reduced) = search_space_counts(instance.len(), n)?;
    if greedy_set.len() != n {
        return Err(Error::InvalidGreedySet {
            reason: format!("expected {n} indices, got {}", greedy_set.len()),
        });
    }
    crate::model::check_indices(greedy_set, instance.len()).map_err(|e| Error::InvalidGreedySet {
        reason: e.to_string(),
    })?;
    check_cap(&reduced, cap)?;

    let mut anchors = greedy_set.to_vec();
    anchors.sort_unstable();
    let mut blocked = vec![false; instance.len()];
    let mut tracker = Tracker::new();
    for &anchor in &anchors {
        blocked[anchor] = true;
        let pool: Vec<usize> = (0..instance.len()).filter(|&i| !blocked[i]).collect();
        let mut walker = SumWalker::new(
            instance,
            &pool,
            n - 1,
            instance.a()[anchor].clone(),
            instance.b()[anchor].clone(),
        );
        while !walker.is_done() {
            tracker.offer(
                walker.num(),
                walker.den(),
                walker.members().chain(std::iter::once(anchor)),
            );
            walker.advance();
        }
    }
    Ok(tracker.finish(SolverKind::Reduced))
}

/// Result of the parametric solver.
#[derive(Debug, Clone)]
pub struct DinkelbachOutcome {
    /// `minimizers` holds the single set reached at the fixpoint;
    /// `enumerated` counts the parametric subproblems solved.
    pub result: OracleResult,
    pub iterations: usize,
    /// The parameter at the start of each iteration; strictly decreasing.
    pub lambdas: Vec<ExactRatio>,
}

/// Dinkelbach iteration seeded with the greedy value.
///
/// For a parameter `λ = p/q` the subproblem `min Σ_{i∈S}(a_i - λ b_i)` over
/// `|S| = n` is solved by taking the `n` smallest keys `q·a_i - p·b_i` (ties
/// to the smaller index). A zero minimum certifies `λ` optimal; otherwise the
/// chosen set has a strictly smaller ratio and becomes the next `λ`.
pub fn dinkelbach_min(instance: &ExactInstance, n: usize) -> Result<DinkelbachOutcome> {
    let (greedy, _) = greedy_select(instance, n)?;
    let mut lambda = greedy.value;
    let mut lambdas = Vec::new();
    let mut order: Vec<usize> = (0..instance.len()).collect();
    loop {
        lambdas.push(lambda.clone());
        let keys: Vec<BigInt> = instance
            .a()
            .iter()
            .zip(instance.b())
            .map(|(a, b)| a * &lambda.den - &lambda.num * b)
            .collect();
        order.sort_unstable_by(|&i, &j| keys[i].cmp(&keys[j]).then(i.cmp(&j)));
        let chosen = &order[..n];
        let total: BigInt = chosen.iter().map(|&i| &keys[i]).sum();
        let value = instance.ratio_of_unchecked(chosen);
        if total.is_zero() {
            let iterations = lambdas.len();
            return Ok(DinkelbachOutcome {
                result: OracleResult {
                    minimizers: vec![sorted(chosen.iter().copied())],
                    value,
                    enumerated: iterations as u64,
                    solver: SolverKind::Dinkelbach,
                },
                iterations,
                lambdas,
            });
        }
        // λ is attained by some feasible set, so the minimum is never positive.
        debug_assert!(total.is_negative());
        lambda = value;
    }
}
