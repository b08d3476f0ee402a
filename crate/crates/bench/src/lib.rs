//! Seeded inputs shared by the benchmarks.

use qprep_core::{normalize, svd, DataVector, RealMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform entries in [-1, 1), normalized to a `q`-qubit state.
pub fn random_state(q: usize, seed: u64) -> DataVector {
    let mut r = rng(seed);
    let raw: Vec<f64> = (0..1usize << q).map(|_| r.random_range(-1.0..1.0)).collect();
    normalize(&raw).expect("nonzero with overwhelming probability")
}

pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> RealMatrix {
    let mut r = rng(seed);
    RealMatrix::from_fn(rows, cols, |_, _| r.random_range(-1.0..1.0))
}

/// Orthogonal `n × n` matrix with determinant +1.
pub fn random_rotation(n: usize, seed: u64) -> RealMatrix {
    let mut u = svd(&random_matrix(n, n, seed)).expect("square input").u;
    if u.determinant() < 0.0 {
        u.negate_column(0);
    }
    u
}
