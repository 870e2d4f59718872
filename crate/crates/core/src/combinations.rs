//! Lexicographic k-subset walk that keeps the element sums up to date.
//!
//! Moving to the lexicographic successor only touches the suffix of positions
//! that changes, and the sums are patched with the removed and added elements
//! instead of being recomputed.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::model::{ProblemInstance, Scalar};

/// Walks the `k`-subsets of `pool` in lexicographic order of positions.
///
/// `num`/`den` always equal the base sums plus the sums over the current subset.
pub struct SumWalker<'a, T> {
    instance: &'a ProblemInstance<T>,
    pool: &'a [usize],
    positions: Vec<usize>,
    num: T,
    den: T,
    done: bool,
}

impl<'a, T: Scalar> SumWalker<'a, T> {
    pub fn new(
        instance: &'a ProblemInstance<T>,
        pool: &'a [usize],
        k: usize,
        base_num: T,
        base_den: T,
    ) -> Self {
        let mut walker = SumWalker {
            instance,
            pool,
            positions: (0..k).collect(),
            num: base_num,
            den: base_den,
            done: k > pool.len(),
        };
        if !walker.done {
            for p in 0..k {
                walker.add(p);
            }
        }
        walker
    }

    pub fn is_done(&self) -> bool {
        self.done
    }

    pub fn num(&self) -> &T {
        &self.num
    }

    pub fn den(&self) -> &T {
        &self.den
    }

    /// Instance indices of the current subset, in increasing pool order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().map(|&p| self.pool[p])
    }

    /// Moves to the next subset; returns `false` once the walk is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let k = self.positions.len();
        let m = self.pool.len();
        let Some(i) = (0..k).rev().find(|&i| self.positions[i] < m - k + i) else {
            self.done = true;
            return false;
        };
        for j in i..k {
            self.remove(self.positions[j]);
        }
        self.positions[i] += 1;
        for j in i + 1..k {
            self.positions[j] = self.positions[j - 1] + 1;
        }
        for j in i..k {
            self.add(self.positions[j]);
        }
        true
    }

    fn add(&mut self, position: usize) {
        let idx = self.pool[position];
        self.num.add_assign_ref(&self.instance.a()[idx]);
        self.den.add_assign_ref(&self.instance.b()[idx]);
    }

    fn remove(&mut self, position: usize) {
        let idx = self.pool[position];
        self.num.sub_assign_ref(&self.instance.a()[idx]);
        self.den.sub_assign_ref(&self.instance.b()[idx]);
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Exact at every step: acc is C(n, i) before the update.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
