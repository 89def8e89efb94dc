//! Cross-checks the bit-packed linear algebra against a byte-per-entry
//! reference eliminator on a large seeded random sample, then pins a few
//! algebraic laws with proptest.

mod common;

use common::{from_bitmatrix, naive_rref, to_bitmatrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use webbcert::f2la::BitMatrix;

fn random_rows(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> Vec<Vec<u8>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| u8::from(rng.gen_bool(density))).collect())
        .collect()
}

fn check_against_reference(rows: &[Vec<u8>], cols: usize) {
    let m = to_bitmatrix(rows, cols);
    let (want_rref, want_rank, want_pivots) = naive_rref(rows, cols);

    let ech = m.rref();
    assert_eq!(ech.rank(), want_rank, "rank");
    assert_eq!(ech.pivot_cols(), &want_pivots[..], "pivot columns");
    assert_eq!(from_bitmatrix(ech.matrix()), want_rref, "reduced form");
    assert_eq!(m.rank(), want_rank);
    assert_eq!(m.transpose().rank(), want_rank, "row rank equals column rank");

    let kernel = m.kernel_basis();
    assert_eq!(kernel.rows(), cols - want_rank, "rank plus nullity is the width");
    assert_eq!(kernel.rank(), kernel.rows(), "kernel basis is independent");
    for r in 0..kernel.rows() {
        assert!(m.mul_vec(&kernel.row(r)).is_zero(), "kernel vectors annihilate");
    }
}

#[test]
fn matches_naive_elimination_on_a_thousand_seeded_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00f2_1a5e_ed00_0001);
    let mut checked = 0;
    for round in 0..1000u32 {
        // skew small so shape edge cases get heavy coverage, but keep some
        // matrices big enough to exercise multi-word rows and tiled code
        let cap = match round % 100 {
            0..=84 => 13,
            85..=94 => 49,
            95..=98 => 161,
            _ => 512,
        };
        let rows = rng.gen_range(0..=cap);
        let cols = rng.gen_range(0..=cap);
        let density = [0.5, 0.08, 0.92][(round % 3) as usize];
        let data = random_rows(&mut rng, rows, cols, density);
        check_against_reference(&data, cols);
        checked += 1;
    }
    assert_eq!(checked, 1000);
}

#[test]
fn degenerate_shapes_agree_with_reference() {
    check_against_reference(&[], 0);
    check_against_reference(&[], 7);
    check_against_reference(&[vec![], vec![]], 0);
    check_against_reference(&[vec![0; 65]], 65);
    check_against_reference(&[vec![1; 64], vec![1; 64]], 64);
    let identity_ish: Vec<Vec<u8>> = (0..5)
        .map(|i| (0..9).map(|j| u8::from(i == j)).collect())
        .collect();
    check_against_reference(&identity_ish, 9);
}

fn seeded_matrix(rows: usize, cols: usize, seed: u64) -> BitMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    to_bitmatrix(&random_rows(&mut rng, rows, cols, 0.5), cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transpose_is_an_involution(rows in 0usize..48, cols in 0usize..48, seed in any::<u64>()) {
        let m = seeded_matrix(rows, cols, seed);
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn rank_is_bounded_by_both_dimensions(rows in 0usize..48, cols in 0usize..48, seed in any::<u64>()) {
        let m = seeded_matrix(rows, cols, seed);
        prop_assert!(m.rank() <= rows.min(cols));
    }

    #[test]
    fn reduction_is_idempotent(rows in 0usize..40, cols in 0usize..40, seed in any::<u64>()) {
        let m = seeded_matrix(rows, cols, seed);
        let once = m.rref();
        let twice = once.matrix().rref();
        prop_assert_eq!(once.matrix(), twice.matrix());
        prop_assert_eq!(once.pivot_cols(), twice.pivot_cols());
    }

    #[test]
    fn matrix_action_is_linear(cols in 1usize..40, seed in any::<u64>()) {
        let m = seeded_matrix(17, cols, seed);
        let u = seeded_matrix(1, cols, seed ^ 0xa5a5).row(0);
        let v = seeded_matrix(1, cols, seed ^ 0x5a5a).row(0);
        let mut sum = u.clone();
        sum.xor_assign(&v);
        let mut want = m.mul_vec(&u);
        want.xor_assign(&m.mul_vec(&v));
        prop_assert_eq!(m.mul_vec(&sum), want);
    }
}
