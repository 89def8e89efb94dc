//! Dense exact linear algebra over the two-element field.
//!
//! Matrices are stored row-major with each row packed into `u64` words, so a
//! row operation is a whole-word XOR sweep. Elimination always picks the
//! lowest-index row holding a 1 in the lowest unresolved column, which makes
//! every result here a pure function of the input: same matrix in, same
//! reduced form, pivot list, and kernel basis out, on any platform.
//!
//! Padding bits past the logical column count are kept at zero and every
//! operation preserves that invariant.
//!
//! # Operations
//!
//! * [`BitMatrix::rref`] reduces to row echelon form and reports pivots.
//! * [`BitMatrix::rank`], [`BitMatrix::kernel_basis`] derive from the same
//!   elimination; kernel rows satisfy `m * v = 0` exactly.
//! * [`EchelonForm::in_span`] tests membership in a row space.
//! * [`EchelonBuilder`] grows a row space one vector at a time, which is how
//!   the resolution engine tracks module spans.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Bit-packed vector over F_2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// All-zero vector of the given length.
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; words_for(len)] }
    }

    /// Builds a vector from a slice of 0/1 values.
    ///
    /// # Panics
    /// Panics if any entry is not 0 or 1.
    #[must_use]
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            assert!(b <= 1, "bit values must be 0 or 1, got {b}");
            if b == 1 {
                v.set(i, true);
            }
        }
        v
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// XORs `other` into `self`.
    ///
    /// # Panics
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    fn xor_words(&mut self, other: &[u64]) {
        debug_assert_eq!(self.words.len(), other.len());
        for (w, o) in self.words.iter_mut().zip(other) {
            *w ^= o;
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, if any.
    #[must_use]
    pub fn first_set(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    #[must_use]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Dense bit-packed matrix over F_2.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// All-zero matrix.
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        BitMatrix { rows, cols, wpr, data: vec![0; rows * wpr] }
    }

    /// Identity matrix of size `n`.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks the given vectors as rows. `cols` fixes the width so that an
    /// empty list still has a well-defined shape.
    ///
    /// # Panics
    /// Panics if any row length differs from `cols`.
    #[must_use]
    pub fn from_rows(rows: &[BitVec], cols: usize) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            assert_eq!(v.len(), cols, "row {r} has wrong length");
            m.row_words_mut(r).copy_from_slice(v.words());
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values. Convenient in tests.
    #[must_use]
    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<BitVec> = rows.iter().map(|r| BitVec::from_bits(r)).collect();
        BitMatrix::from_rows(&vecs, cols)
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.data[r * self.wpr + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.data[r * self.wpr + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[must_use]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    /// Copies row `r` out as a vector.
    #[must_use]
    pub fn row(&self, r: usize) -> BitVec {
        BitVec { len: self.cols, words: self.row_words(r).to_vec() }
    }

    /// Overwrites row `r` with `v`.
    pub fn set_row(&mut self, r: usize, v: &BitVec) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.row_words_mut(r).copy_from_slice(v.words());
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * self.wpr);
        head[a * self.wpr..(a + 1) * self.wpr].swap_with_slice(&mut tail[..self.wpr]);
    }

    /// XORs row `src` into row `dst`.
    pub fn xor_rows(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst, "xor_rows requires distinct rows");
        let (s, d) = (src * self.wpr, dst * self.wpr);
        for i in 0..self.wpr {
            let v = self.data[s + i];
            self.data[d + i] ^= v;
        }
    }

    /// Matrix-vector product `m * v` with `v` of length `cols`.
    #[must_use]
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for (w, o) in self.row_words(r).iter().zip(v.words()) {
                acc ^= w & o;
            }
            if acc.count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Transposed copy, computed on 64x64 tiles.
    #[must_use]
    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        let mut tile = [0u64; 64];
        for rb in (0..self.rows).step_by(64) {
            let rspan = (self.rows - rb).min(64);
            for cb in (0..self.cols).step_by(64) {
                let cspan = (self.cols - cb).min(64);
                for (i, slot) in tile.iter_mut().enumerate() {
                    *slot = if i < rspan { self.data[(rb + i) * self.wpr + cb / WORD_BITS] } else { 0 };
                }
                transpose64(&mut tile);
                for (j, &w) in tile.iter().enumerate().take(cspan) {
                    out.data[(cb + j) * out.wpr + rb / WORD_BITS] = w;
                }
            }
        }
        out
    }

    /// Row echelon reduction, returning the reduced matrix and pivot columns.
    #[must_use]
    pub fn rref(&self) -> EchelonForm {
        self.clone().into_rref()
    }

    /// Consuming variant of [`BitMatrix::rref`]; avoids one copy on large inputs.
    #[must_use]
    pub fn into_rref(mut self) -> EchelonForm {
        let pivot_cols = rref_in_place(&mut self);
        EchelonForm { matrix: self, pivot_cols }
    }

    /// Number of linearly independent rows.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right null space `{v : m * v = 0}`, one vector per row.
    ///
    /// The result has `cols() - rank()` rows of width `cols()`, listed in
    /// increasing order of their free column.
    #[must_use]
    pub fn kernel_basis(&self) -> BitMatrix {
        self.clone().into_kernel_basis()
    }

    /// Consuming variant of [`BitMatrix::kernel_basis`].
    #[must_use]
    pub fn into_kernel_basis(self) -> BitMatrix {
        let cols = self.cols;
        let ech = self.into_rref();
        let pivots = &ech.pivot_cols;
        let mut is_pivot = vec![false; cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = BitMatrix::zeros(free.len(), cols);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, true);
            for (j, &p) in pivots.iter().enumerate() {
                if ech.matrix.get(j, f) {
                    out.set(i, p, true);
                }
            }
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(40) {
            writeln!(f, "{:?}", self.row(r))?;
        }
        if self.rows > 40 {
            writeln!(f, "...")?;
        }
        Ok(())
    }
}

/// In-place reduction to reduced row echelon form. Pivot choice is fixed:
/// scan columns left to right, take the first unused row with a 1 there.
fn rref_in_place(m: &mut BitMatrix) -> Vec<usize> {
    let mut pivot_cols = Vec::new();
    let mut pr = 0;
    let mut buf = vec![0u64; m.wpr];
    for c in 0..m.cols {
        if pr == m.rows {
            break;
        }
        let word = c / WORD_BITS;
        let mask = 1u64 << (c % WORD_BITS);
        let Some(hit) = (pr..m.rows).find(|&r| m.data[r * m.wpr + word] & mask != 0) else {
            continue;
        };
        m.swap_rows(pr, hit);
        buf.copy_from_slice(m.row_words(pr));
        for r in 0..m.rows {
            if r != pr && m.data[r * m.wpr + word] & mask != 0 {
                let row = m.row_words_mut(r);
                for (d, s) in row.iter_mut().zip(&buf) {
                    *d ^= s;
                }
            }
        }
        pivot_cols.push(c);
        pr += 1;
    }
    pivot_cols
}

/// 64x64 bit transpose with bit `c` of word `r` holding entry `(r, c)`.
fn transpose64(a: &mut [u64; 64]) {
    let mut j = 32;
    let mut m: u64 = 0x0000_0000_FFFF_FFFF;
    while j != 0 {
        let mut k = 0;
        while k < 64 {
            let t = ((a[k] >> j) ^ a[k + j]) & m;
            a[k + j] ^= t;
            a[k] ^= t << j;
            k = (k + j + 1) & !j;
        }
        j >>= 1;
        m ^= m << j;
    }
}

/// Result of row reduction: the reduced matrix plus its pivot columns.
///
/// The number of pivot columns equals the number of nonzero rows equals the
/// rank. Pivot columns are strictly increasing and each holds a single 1.
#[derive(Clone, Debug)]
pub struct EchelonForm {
    matrix: BitMatrix,
    pivot_cols: Vec<usize>,
}

impl EchelonForm {
    #[must_use]
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    #[must_use]
    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// Whether `v` lies in the row space.
    ///
    /// # Panics
    /// Panics if `v.len()` differs from the matrix width.
    #[must_use]
    pub fn in_span(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.matrix.cols, "vector length mismatch in in_span");
        let mut w = v.clone();
        for (i, &p) in self.pivot_cols.iter().enumerate() {
            if w.get(p) {
                w.xor_words(self.matrix.row_words(i));
            }
        }
        w.is_zero()
    }
}

/// Incrementally grown echelon basis of a row space.
///
/// Rows are kept sorted by pivot column and forward-reduced only; membership
/// still reduces to the zero test because every insert fully reduces against
/// the rows already present.
#[derive(Clone)]
pub struct EchelonBuilder {
    cols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    #[must_use]
    pub fn new(cols: usize) -> Self {
        EchelonBuilder { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows.
    #[must_use]
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                v.xor_assign(&self.rows[i]);
            }
        }
        v
    }

    /// Whether `v` lies in the span built so far.
    #[must_use]
    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the span. Returns true when the rank grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let reduced = self.reduce(v);
        match reduced.first_set() {
            None => false,
            Some(p) => {
                let pos = self.pivots.partition_point(|&q| q < p);
                self.pivots.insert(pos, p);
                self.rows.insert(pos, reduced);
                true
            }
        }
    }
}
