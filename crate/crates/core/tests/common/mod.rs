//! Naive reference implementations the integration tests eliminate against.
//! Everything here is byte-per-entry and written for obviousness, not speed.

use webbcert::f2la::BitMatrix;

/// Reduced row echelon form over F_2 the textbook way.
/// Returns the reduced rows, the rank and the pivot columns.
pub fn naive_rref(m: &[Vec<u8>], cols: usize) -> (Vec<Vec<u8>>, usize, Vec<usize>) {
    let mut a: Vec<Vec<u8>> = m.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] == 1) else { continue };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && a[i][c] == 1 {
                for j in 0..cols {
                    a[i][j] ^= a[r][j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, r, pivots)
}

pub fn to_bitmatrix(rows: &[Vec<u8>], cols: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), cols);
        for (j, &b) in row.iter().enumerate() {
            if b == 1 {
                m.set(i, j, true);
            }
        }
    }
    m
}

pub fn from_bitmatrix(m: &BitMatrix) -> Vec<Vec<u8>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| u8::from(m.get(i, j))).collect())
        .collect()
}
