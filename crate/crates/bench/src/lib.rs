//! Deterministic input generators shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsig_core::{rat, Scalar, TimeSeries};

/// Float series with entries uniform in [-1, 1].
pub fn random_float_series(seed: u64, d: u32, n: usize) -> TimeSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..=n)
        .map(|_| {
            (0..d)
                .map(|_| Scalar::Float(rng.gen_range(-1.0..=1.0)))
                .collect()
        })
        .collect();
    TimeSeries::from_rows(rows).expect("well-formed series")
}

/// Exact series with half-integer entries in [-5, 5].
pub fn random_exact_series(seed: u64, d: u32, n: usize) -> TimeSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..=n)
        .map(|_| {
            (0..d)
                .map(|_| Scalar::Exact(rat(rng.gen_range(-10..=10), 2)))
                .collect()
        })
        .collect();
    TimeSeries::from_rows(rows).expect("well-formed series")
}
