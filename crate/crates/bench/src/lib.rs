//! Shared fixtures for the benchmark targets.

use rand::{Rng, SeedableRng};
use spflag::scalar::Field;
use spflag::Mat;

/// Deterministic dense matrix over `F_1009`.
pub fn seeded_matrix(rows: usize, cols: usize, seed: u64) -> Mat {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let f = Field::fp(1009);
    Mat::from_fn(rows, cols, f, |_, _| f.from_i64(rng.gen_range(0..1009)))
}
