//! Problem instances, exact ratio values and index-set evaluation.
//!
//! Everything here is generic over [`Scalar`], which has two implementations:
//! [`BigInt`] for the exact path used by every verification routine, and `f64`
//! for the fast path used by benchmarks. Ratios are always ordered by
//! cross-multiplication; no division happens on either path.
//!
//! Indices are 0-based throughout the library. Error values report 1-based
//! indices.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Array, Error, Result};

/// Numeric type usable as an array element.
pub trait Scalar: Clone + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;

    fn is_positive(&self) -> bool;

    /// `false` only for values that cannot take part in a comparison (NaN, infinities).
    fn is_finite(&self) -> bool {
        true
    }

    fn add_ref(&self, other: &Self) -> Self;

    fn add_assign_ref(&mut self, other: &Self);

    fn sub_assign_ref(&mut self, other: &Self);

    /// Sign of `n1 * d2 - n2 * d1`.
    fn cross_cmp(n1: &Self, d1: &Self, n2: &Self, d2: &Self) -> Ordering;

    fn to_f64(&self) -> f64;
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }

    fn cross_cmp(n1: &Self, d1: &Self, n2: &Self, d2: &Self) -> Ordering {
        (n1 * d2).cmp(&(n2 * d1))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::INFINITY)
    }
}

/// Binary64 arithmetic. Sums may overflow to infinity on extreme inputs and
/// cross products may round; no guarantee is made beyond IEEE semantics.
impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn is_positive(&self) -> bool {
        *self > 0.0
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }

    fn cross_cmp(n1: &Self, d1: &Self, n2: &Self, d2: &Self) -> Ordering {
        (n1 * d2).partial_cmp(&(n2 * d1)).unwrap_or(Ordering::Equal)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// A fraction of element sums, kept as an unreduced `(num, den)` pair.
///
/// Equality and ordering compare the represented values, so `1/2 == 2/4`.
#[derive(Debug, Clone)]
pub struct RatioValue<T> {
    pub num: T,
    pub den: T,
}

impl<T: Scalar> RatioValue<T> {
    /// `den` must be positive.
    pub fn new(num: T, den: T) -> Self {
        debug_assert!(den.is_positive(), "ratio denominator must be positive");
        RatioValue { num, den }
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64() / self.den.to_f64()
    }

    /// Same numerator and denominator, not just the same value.
    pub fn is_identical(&self, other: &Self) -> bool
    where
        T: PartialEq,
    {
        self.num == other.num && self.den == other.den
    }
}

/// Orders two ratios by the sign of `r1.num * r2.den - r2.num * r1.den`.
pub fn compare_ratios<T: Scalar>(r1: &RatioValue<T>, r2: &RatioValue<T>) -> Ordering {
    T::cross_cmp(&r1.num, &r1.den, &r2.num, &r2.den)
}

impl<T: Scalar> PartialEq for RatioValue<T> {
    fn eq(&self, other: &Self) -> bool {
        compare_ratios(self, other) == Ordering::Equal
    }
}

impl<T: Scalar> PartialOrd for RatioValue<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(compare_ratios(self, other))
    }
}

impl Eq for RatioValue<BigInt> {}

impl Ord for RatioValue<BigInt> {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_ratios(self, other)
    }
}

impl<T: fmt::Display> fmt::Display for RatioValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Two positive arrays of equal length `N >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance<T> {
    a: Vec<T>,
    b: Vec<T>,
}

pub type ExactInstance = ProblemInstance<BigInt>;
pub type FloatInstance = ProblemInstance<f64>;
pub type ExactRatio = RatioValue<BigInt>;

impl<T: Scalar> ProblemInstance<T> {
    /// Validates and wraps the two arrays.
    pub fn new(a: Vec<T>, b: Vec<T>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::MismatchedLengths {
                a: a.len(),
                b: b.len(),
            });
        }
        for (array, values) in [(Array::A, &a), (Array::B, &b)] {
            for (i, v) in values.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFiniteElement { array, index: i + 1 });
                }
                if !v.is_positive() {
                    return Err(Error::NonPositiveElement { array, index: i + 1 });
                }
            }
        }
        if a.len() < 2 {
            return Err(Error::TooShort { len: a.len() });
        }
        Ok(ProblemInstance { a, b })
    }

    /// Number of elements `N`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    /// `a[i] / b[i]`.
    pub fn element_ratio(&self, i: usize) -> RatioValue<T> {
        RatioValue::new(self.a[i].clone(), self.b[i].clone())
    }

    /// Sums both arrays over `indices`.
    pub fn ratio_of(&self, indices: &[usize]) -> Result<RatioValue<T>> {
        check_indices(indices, self.len())?;
        Ok(self.ratio_of_unchecked(indices))
    }

    pub(crate) fn ratio_of_unchecked(&self, indices: &[usize]) -> RatioValue<T> {
        let mut num = T::zero();
        let mut den = T::zero();
        for &i in indices {
            num.add_assign_ref(&self.a[i]);
            den.add_assign_ref(&self.b[i]);
        }
        RatioValue::new(num, den)
    }

    /// Checks `1 <= n < N`.
    pub fn check_subset_size(&self, n: usize) -> Result<()> {
        if n == 0 || n >= self.len() {
            return Err(Error::InvalidSubsetSize { n, len: self.len() });
        }
        Ok(())
    }

    /// Applies `perm` to both arrays: element `i` of the result is element `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len(), "permutation length");
        ProblemInstance {
            a: perm.iter().map(|&p| self.a[p].clone()).collect(),
            b: perm.iter().map(|&p| self.b[p].clone()).collect(),
        }
    }
}

impl ExactInstance {
    /// Builds an exact instance from machine integers.
    pub fn from_u64(a: &[u64], b: &[u64]) -> Result<Self> {
        Self::new(
            a.iter().map(|&x| BigInt::from(x)).collect(),
            b.iter().map(|&x| BigInt::from(x)).collect(),
        )
    }

    /// The same instance on the float path.
    pub fn to_float(&self) -> FloatInstance {
        ProblemInstance {
            a: self.a.iter().map(Scalar::to_f64).collect(),
            b: self.b.iter().map(Scalar::to_f64).collect(),
        }
    }
}

/// Validates an index set against an instance length.
pub fn check_indices(indices: &[usize], len: usize) -> Result<()> {
    if indices.is_empty() {
        return Err(Error::EmptySelection);
    }
    let mut seen = vec![false; len];
    for &i in indices {
        if i >= len {
            return Err(Error::IndexOutOfRange { index: i + 1, len });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::DuplicateIndex { index: i + 1 });
        }
    }
    Ok(())
}

/// Solver that produced a [`Selection`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Greedy,
    Brute,
    Reduced,
    Dinkelbach,
}

impl SolverKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverKind::Greedy => "greedy",
            SolverKind::Brute => "brute",
            SolverKind::Reduced => "reduced",
            SolverKind::Dinkelbach => "dinkelbach",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A chosen index set with its value.
#[derive(Debug, Clone)]
pub struct Selection<T> {
    /// Sorted, distinct, 0-based.
    pub indices: Vec<usize>,
    pub value: RatioValue<T>,
    pub solver: SolverKind,
}

impl<T: Scalar> Selection<T> {
    pub fn new(mut indices: Vec<usize>, value: RatioValue<T>, solver: SolverKind) -> Self {
        indices.sort_unstable();
        Selection {
            indices,
            value,
            solver,
        }
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

/// Per-iteration record of a greedy run.
///
/// `q[k]` holds the running sums after the `(k+1)`-th pick, so `q[k].num` and
/// `q[k].den` are also the partial sums fed to the next iteration.
#[derive(Debug, Clone)]
pub struct GreedyTrace<T> {
    pub picks: Vec<usize>,
    pub q: Vec<RatioValue<T>>,
    pub ties_encountered: bool,
}

impl<T: Scalar> GreedyTrace<T> {
    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    pub fn partial_num(&self, k: usize) -> &T {
        &self.q[k].num
    }

    pub fn partial_den(&self, k: usize) -> &T {
        &self.q[k].den
    }

    pub fn final_value(&self) -> Option<&RatioValue<T>> {
        self.q.last()
    }
}
