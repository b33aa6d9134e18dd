//! Fixtures shared by the benchmarks.

use hamquot::IntMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded `n x n` matrix with entries in `-9..=9`.
pub fn random_int_matrix(n: usize, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-9..=9)).collect();
    IntMatrix::from_i64(n, n, &entries).expect("square")
}
