//! Inputs shared by the benchmarks.

use hgauge_core::{library, GaugeModel, IntMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A reproducible `n × n` matrix with entries in `-bound..=bound`.
pub fn random_matrix(n: usize, bound: i64, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows(&rows)
}

pub fn model(name: &str) -> GaugeModel {
    library::load(name).expect("bundled model")
}
