//! Seeded instances for the criterion benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratiosel_core::{ExactInstance, FloatInstance};

/// Integer-valued arrays in `[1, 2^20]`.
pub fn arrays(seed: u64, len: usize) -> (Vec<u64>, Vec<u64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = (0..len).map(|_| rng.random_range(1..=1u64 << 20)).collect();
    let b = (0..len).map(|_| rng.random_range(1..=1u64 << 20)).collect();
    (a, b)
}

pub fn float_instance(seed: u64, len: usize) -> FloatInstance {
    let (a, b) = arrays(seed, len);
    FloatInstance::new(
        a.into_iter().map(|x| x as f64).collect(),
        b.into_iter().map(|x| x as f64).collect(),
    )
    .expect("positive")
}

pub fn exact_instance(seed: u64, len: usize) -> ExactInstance {
    let (a, b) = arrays(seed, len);
    ExactInstance::from_u64(&a, &b).expect("positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_agree() {
        assert_eq!(exact_instance(1, 64).to_float(), float_instance(1, 64));
    }
}
