//! Greedy index selection.
//!
//! Starting from the best single element, each iteration adds the index that
//! minimizes the ratio of the augmented sums. The running sums are carried
//! forward, so evaluating a candidate costs one addition on each side plus a
//! cross-multiplied comparison. One iteration scans the arrays once; `n`
//! iterations cost `O(nN)`.
//!
//! Ties go to the smallest index.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::model::{GreedyTrace, ProblemInstance, RatioValue, Scalar, Selection, SolverKind};

/// Outcome of one greedy iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub index: usize,
    /// At least two candidates attained the minimum.
    pub tie: bool,
}

/// Finds the index outside `excluded` minimizing
/// `(partial_num + a[k]) / (partial_den + b[k])`.
///
/// `excluded` is a membership mask of length `N`. The partial sums must be the
/// sums over the excluded indices (both zero when nothing is excluded).
pub fn greedy_step<T: Scalar>(
    instance: &ProblemInstance<T>,
    partial_num: &T,
    partial_den: &T,
    excluded: &[bool],
) -> Result<Step> {
    if excluded.len() != instance.len() {
        return Err(Error::DimensionMismatch {
            reason: format!(
                "exclusion mask has length {}, instance has {}",
                excluded.len(),
                instance.len()
            ),
        });
    }
    let a = instance.a();
    let b = instance.b();
    let mut best: Option<(usize, T, T)> = None;
    let mut tie = false;
    for k in 0..a.len() {
        if excluded[k] {
            continue;
        }
        let num = partial_num.add_ref(&a[k]);
        let den = partial_den.add_ref(&b[k]);
        match &best {
            None => best = Some((k, num, den)),
            Some((_, best_num, best_den)) => match T::cross_cmp(&num, &den, best_num, best_den) {
                Ordering::Less => {
                    best = Some((k, num, den));
                    tie = false;
                }
                Ordering::Equal => tie = true,
                Ordering::Greater => {}
            },
        }
    }
    best.map(|(index, _, _)| Step { index, tie })
        .ok_or(Error::AllExcluded)
}

/// Runs `n` greedy iterations and returns the selected set with its trace.
pub fn greedy_select<T: Scalar>(
    instance: &ProblemInstance<T>,
    n: usize,
) -> Result<(Selection<T>, GreedyTrace<T>)> {
    instance.check_subset_size(n)?;
    let mut excluded = vec![false; instance.len()];
    let mut num = T::zero();
    let mut den = T::zero();
    let mut picks = Vec::with_capacity(n);
    let mut q = Vec::with_capacity(n);
    let mut ties_encountered = false;
    for _ in 0..n {
        let step = greedy_step(instance, &num, &den, &excluded)?;
        excluded[step.index] = true;
        num.add_assign_ref(&instance.a()[step.index]);
        den.add_assign_ref(&instance.b()[step.index]);
        ties_encountered |= step.tie;
        picks.push(step.index);
        q.push(RatioValue::new(num.clone(), den.clone()));
    }
    let selection = Selection::new(picks.clone(), RatioValue::new(num, den), SolverKind::Greedy);
    let trace = GreedyTrace {
        picks,
        q,
        ties_encountered,
    };
    Ok((selection, trace))
}
