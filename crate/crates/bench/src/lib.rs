//! Shared helpers for the benchmark suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use webbcert::f2la::BitMatrix;

/// A reproducible random matrix with the given fill density.
pub fn seeded_matrix(rows: usize, cols: usize, density: f64, seed: u64) -> BitMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = BitMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(density) {
                m.set(i, j, true);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_matrix() {
        let a = seeded_matrix(64, 96, 0.5, 42);
        let b = seeded_matrix(64, 96, 0.5, 42);
        assert_eq!(a, b);
        assert_ne!(a, seeded_matrix(64, 96, 0.5, 43));
    }

    #[test]
    fn density_lands_in_a_plausible_band() {
        let m = seeded_matrix(128, 128, 0.25, 7);
        let ones: usize = (0..128).map(|i| m.row(i).count_ones()).sum();
        let expected = 128 * 128 / 4;
        assert!((ones as i64 - expected as i64).abs() < expected as i64 / 4);
    }
}
