//! Mod-2 cohomology of a finite group, computed from free resolutions over
//! its group algebra.
//!
//! The trivial module F_2 is resolved by free modules `F_2[G]^(b_i)`,
//! starting from the augmentation `F_2[G] -> F_2` that sends every group
//! element to 1. Each differential is pinned down by the images of its free
//! generators, stored as bit vectors of length `b * |G|` with coordinate
//! `t * |G| + h` meaning the group element with index `h` in slot `t`.
//! Expanding a differential to a plain F_2 matrix (one row per pair of slot
//! and group element) turns kernel computations into [`crate::f2la`]
//! eliminations, and the images of the next stage are chosen as module
//! generators of that kernel:
//!
//! * for 2-groups, [`minimal_generators`] lifts a basis of K modulo I*K,
//!   where I is the augmentation ideal. The group algebra of a 2-group is
//!   local, so this yields a minimal resolution and the cochain complex
//!   `Hom(F_2[G]^(b_i), F_2)` has zero differentials; the rank b_d itself is
//!   dim H^d.
//! * for everything else, [`greedy_generators`] scans the kernel basis in a
//!   fixed order and keeps what is not yet in the module span of the kept
//!   vectors. The resolution is exact but not minimal, and dimensions are
//!   read off the honest cochain complex.
//!
//! Both paths are deterministic. A normalized bar-complex oracle
//! ([`bar_oracle`]) provides an independent cross-check for groups of order
//! at most 16.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::f2la::{BitMatrix, BitVec, EchelonBuilder};
use crate::grpcore::{ElementTable, GroupError, GroupLabel};

/// Default ceiling on the bit count of one expanded differential.
pub const DEFAULT_MAX_MATRIX_BITS: u64 = 1 << 33;

#[derive(Debug, Error)]
pub enum CohomError {
    /// An expanded differential would not fit under the configured ceiling.
    #[error("expanded differential needs {needed} bits, over the ceiling of {cap}; consult a ledger instead")]
    ResourceExceeded { needed: u64, cap: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
    /// The bar oracle only handles groups of order at most 16 and degrees
    /// at most 4.
    #[error("bar oracle is limited to order <= 16 and degree <= 4, got order {order} and degree {degree}")]
    TooLargeForOracle { order: usize, degree: usize },
    /// The resolution is too short for the requested degree.
    #[error("degree {degree} needs a resolution of length {needed}, but this one has length {have}")]
    DegreeOutOfRange { degree: usize, needed: usize, have: usize },
}

/// Applies the left action of generator `k` to a vector in `F_2[G]^b`, one
/// coordinate permutation per slot.
fn apply_generator(table: &ElementTable, k: usize, v: &BitVec) -> BitVec {
    let n = table.order();
    debug_assert_eq!(v.len() % n, 0, "vector width must be a multiple of the group order");
    let action = table.gen_action(k);
    let mut out = BitVec::zeros(v.len());
    for (wi, &word) in v.words().iter().enumerate() {
        let mut w = word;
        while w != 0 {
            let bit = wi * 64 + w.trailing_zeros() as usize;
            w &= w - 1;
            let slot = bit / n;
            let h = bit - slot * n;
            out.set(slot * n + action[h] as usize, true);
        }
    }
    out
}

/// A map of free `F_2[G]`-modules, determined by the images of the source
/// generators.
///
/// `images` is a `source_rank x (target_rank * |G|)` matrix, one row per
/// source generator.
pub struct FreeModuleMap {
    source_rank: usize,
    target_rank: usize,
    images: BitMatrix,
}

impl FreeModuleMap {
    /// # Panics
    /// Panics if the image width is not `target_rank * order`.
    #[must_use]
    pub fn new(images: BitMatrix, target_rank: usize, order: usize) -> Self {
        assert_eq!(images.cols(), target_rank * order, "image width mismatch");
        FreeModuleMap { source_rank: images.rows(), target_rank, images }
    }

    #[must_use]
    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    #[must_use]
    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    #[must_use]
    pub fn images(&self) -> &BitMatrix {
        &self.images
    }

    /// Expands to a plain F_2 matrix of shape
    /// `(source_rank * |G|) x (target_rank * |G|)`, row `(s, g)` holding the
    /// image of `g * e_s`. Rows are filled along the BFS parent links of the
    /// element table, so the cost is one coordinate permutation per element.
    pub fn expanded(&self, table: &ElementTable, max_bits: u64) -> Result<BitMatrix, CohomError> {
        let n = table.order();
        let rows = self.source_rank * n;
        let cols = self.target_rank * n;
        let needed = rows as u64 * cols as u64;
        if needed > max_bits {
            return Err(CohomError::ResourceExceeded { needed, cap: max_bits });
        }
        let mut m = BitMatrix::zeros(rows, cols);
        for s in 0..self.source_rank {
            m.set_row(s * n, &self.images.row(s));
            for g in 1..n {
                let (k, p) = table.parent(g);
                let row = apply_generator(table, k, &m.row(s * n + p));
                m.set_row(s * n + g, &row);
            }
        }
        Ok(m)
    }

    /// The induced map on `Hom(-, F_2)`: entry `(j, t)` is the mod-2
    /// coefficient sum of slot `t` in the image of source generator `j`.
    #[must_use]
    pub fn cochain_matrix(&self, order: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.source_rank, self.target_rank);
        for j in 0..self.source_rank {
            for t in 0..self.target_rank {
                let mut parity = false;
                for h in 0..order {
                    if self.images.get(j, t * order + h) {
                        parity = !parity;
                    }
                }
                if parity {
                    m.set(j, t, true);
                }
            }
        }
        m
    }
}

/// Kernel of a module map as a plain row basis: expand, transpose, eliminate.
fn kernel_of_map(
    map: &FreeModuleMap,
    table: &ElementTable,
    max_bits: u64,
) -> Result<BitMatrix, CohomError> {
    let expanded = map.expanded(table, max_bits)?;
    let transposed = expanded.transpose();
    drop(expanded);
    Ok(transposed.into_kernel_basis())
}

/// Kernel of the augmentation map: all vectors with an even number of set
/// coordinates.
fn augmentation_kernel(order: usize) -> BitMatrix {
    let mut ones = BitVec::zeros(order);
    for i in 0..order {
        ones.set(i, true);
    }
    BitMatrix::from_rows(&[ones], order).into_kernel_basis()
}

/// Minimal module generators of a kernel over a 2-group: a lift of a basis
/// of K modulo I*K, where I is the augmentation ideal.
///
/// I*K is spanned by `(g + 1) * v` over the group generators g and a basis
/// of K, since the augmentation ideal is generated by `g + 1` as a left
/// ideal. Nakayama then guarantees the kept vectors generate, and their
/// count is forced, so the selection is minimal no matter the scan order.
pub fn minimal_generators(
    kernel: &BitMatrix,
    table: &ElementTable,
) -> Result<Vec<BitVec>, CohomError> {
    let (_, odd) = table.order_factorization();
    if odd != 1 {
        return Err(GroupError::NotA2Group { odd_part: odd }.into());
    }
    let n = table.order();
    assert_eq!(kernel.cols() % n, 0, "kernel width must be a multiple of the group order");
    let mut span = EchelonBuilder::new(kernel.cols());
    for r in 0..kernel.rows() {
        let row = kernel.row(r);
        for k in 0..table.num_generators() {
            let mut moved = apply_generator(table, k, &row);
            moved.xor_assign(&row);
            span.insert(moved);
        }
    }
    let mut kept = Vec::new();
    for r in 0..kernel.rows() {
        if span.insert(kernel.row(r)) {
            kept.push(kernel.row(r));
        }
    }
    Ok(kept)
}

/// Module generators of a kernel over an arbitrary finite group: scan the
/// kernel basis in order and keep whatever is not yet in the `F_2[G]`-span
/// of the kept vectors.
///
/// The result generates the kernel as a module but need not be minimal;
/// downstream cohomology is unaffected by that.
#[must_use]
pub fn greedy_generators(kernel: &BitMatrix, table: &ElementTable) -> Vec<BitVec> {
    let n = table.order();
    assert_eq!(kernel.cols() % n, 0, "kernel width must be a multiple of the group order");
    let mut span = EchelonBuilder::new(kernel.cols());
    let mut kept = Vec::new();
    let mut queue = VecDeque::new();
    for r in 0..kernel.rows() {
        let row = kernel.row(r);
        if span.contains(&row) {
            continue;
        }
        kept.push(row.clone());
        // close the span under the group action before looking at the next
        // candidate
        queue.push_back(row);
        while let Some(w) = queue.pop_front() {
            if span.insert(w.clone()) {
                for k in 0..table.num_generators() {
                    queue.push_back(apply_generator(table, k, &w));
                }
            }
        }
    }
    kept
}

/// Knobs for [`build_resolution`].
#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Ceiling on the bit count of any expanded differential.
    pub max_matrix_bits: u64,
    /// Use the generic path even for 2-groups. Costs an extra stage of
    /// resolution length but exercises the same code as mixed-order groups,
    /// which is useful for cross-checking.
    pub force_generic: bool,
    /// When set, the kernel basis is shuffled before generator selection at
    /// every stage. Cohomology must not change; tests use this to confirm
    /// order independence.
    pub shuffle_seed: Option<u64>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_matrix_bits: DEFAULT_MAX_MATRIX_BITS,
            force_generic: false,
            shuffle_seed: None,
        }
    }
}

/// A free resolution of the trivial module, of finite length.
///
/// `ranks` lists `b_0 ..= b_N` with `b_0 = 1`; `differentials` holds
/// `d_1 ..= d_N` with `d_i` mapping rank `b_i` to rank `b_(i-1)`. The
/// augmentation `d_0` is implicit.
pub struct Resolution {
    group: Arc<ElementTable>,
    ranks: Vec<usize>,
    differentials: Vec<FreeModuleMap>,
    minimal: bool,
}

impl Resolution {
    #[must_use]
    pub fn group(&self) -> &Arc<ElementTable> {
        &self.group
    }

    /// N, the index of the last computed differential.
    #[must_use]
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    #[must_use]
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    #[must_use]
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// The differential `d_i`, 1-based.
    #[must_use]
    pub fn differential(&self, i: usize) -> &FreeModuleMap {
        assert!(i >= 1 && i <= self.length(), "differential index out of range");
        &self.differentials[i - 1]
    }

    /// Induced cochain maps `alpha_1 ..= alpha_N` on `Hom(-, F_2)`.
    #[must_use]
    pub fn cochain_maps(&self) -> Vec<BitMatrix> {
        let n = self.group.order();
        self.differentials.iter().map(|d| d.cochain_matrix(n)).collect()
    }

    /// Cohomology dimensions for degrees `0 .. N`: kernel of the outgoing
    /// cochain map minus the rank of the incoming one.
    #[must_use]
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let alpha_ranks: Vec<usize> = self.cochain_maps().iter().map(BitMatrix::rank).collect();
        let mut dims = Vec::with_capacity(self.length());
        for d in 0..self.length() {
            let ker = self.ranks[d] - alpha_ranks[d];
            let im = if d == 0 { 0 } else { alpha_ranks[d - 1] };
            dims.push(ker - im);
        }
        dims
    }

    /// dim H^d for a single degree.
    ///
    /// Minimal resolutions answer up to `d = N` straight from the ranks;
    /// generic ones need `d < N` for the outgoing cochain map to exist.
    pub fn h_dim(&self, degree: usize) -> Result<usize, CohomError> {
        if self.minimal {
            if degree > self.length() {
                return Err(CohomError::DegreeOutOfRange {
                    degree,
                    needed: degree,
                    have: self.length(),
                });
            }
            Ok(self.ranks[degree])
        } else {
            if degree >= self.length() {
                return Err(CohomError::DegreeOutOfRange {
                    degree,
                    needed: degree + 1,
                    have: self.length(),
                });
            }
            Ok(self.cohomology_dims()[degree])
        }
    }
}

impl fmt::Debug for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Resolution {{ order: {}, ranks: {:?}, minimal: {} }}",
            self.group.order(),
            self.ranks,
            self.minimal
        )
    }
}

fn shuffled_rows(m: &BitMatrix, seed: u64) -> BitMatrix {
    let mut rows: Vec<BitVec> = (0..m.rows()).map(|r| m.row(r)).collect();
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for i in (1..rows.len()).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        rows.swap(i, j);
    }
    BitMatrix::from_rows(&rows, m.cols())
}

/// Builds a free resolution of length `length >= 1`.
///
/// 2-groups get the minimal path unless `opts.force_generic` is set. The
/// construction is exact by construction: each stage's images generate the
/// previous kernel as a module.
pub fn build_resolution(
    group: &Arc<ElementTable>,
    length: usize,
    opts: &BuildOptions,
) -> Result<Resolution, CohomError> {
    assert!(length >= 1, "resolution length must be at least 1");
    let n = group.order();
    let minimal = group.is_two_group() && !opts.force_generic;
    let mut ranks = vec![1usize];
    let mut differentials: Vec<FreeModuleMap> = Vec::with_capacity(length);
    let mut kernel = augmentation_kernel(n);
    for stage in 1..=length {
        if let Some(seed) = opts.shuffle_seed {
            kernel = shuffled_rows(&kernel, seed ^ stage as u64);
        }
        let generators = if minimal {
            minimal_generators(&kernel, group)?
        } else {
            greedy_generators(&kernel, group)
        };
        let target_rank = ranks[stage - 1];
        let images = BitMatrix::from_rows(&generators, target_rank * n);
        let map = FreeModuleMap::new(images, target_rank, n);
        if stage < length {
            kernel = kernel_of_map(&map, group, opts.max_matrix_bits)?;
        }
        ranks.push(generators.len());
        differentials.push(map);
    }
    Ok(Resolution { group: Arc::clone(group), ranks, differentials, minimal })
}

/// How a dimension was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    MinimalResolution,
    GenericResolution,
    BarOracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::MinimalResolution => "minimal-resolution",
            Method::GenericResolution => "generic-resolution",
            Method::BarOracle => "bar-oracle",
        })
    }
}

/// One computed cohomology dimension, with enough context to report it.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub label: GroupLabel,
    pub degree: usize,
    pub dim: usize,
    pub method: Method,
    pub resolution_ranks: Option<Vec<usize>>,
}

/// dim H^degree of the given group via the resolution engine.
pub fn cohomology_dim(
    group: &Arc<ElementTable>,
    label: GroupLabel,
    degree: usize,
    opts: &BuildOptions,
) -> Result<CohomologyResult, CohomError> {
    let minimal = group.is_two_group() && !opts.force_generic;
    let length = if minimal { degree.max(1) } else { degree + 1 };
    let resolution = build_resolution(group, length, opts)?;
    let dim = resolution.h_dim(degree)?;
    Ok(CohomologyResult {
        label,
        degree,
        dim,
        method: if minimal { Method::MinimalResolution } else { Method::GenericResolution },
        resolution_ranks: Some(resolution.ranks().to_vec()),
    })
}

/// dim H^degree via the bar oracle; independent of the resolution engine.
pub fn cohomology_dim_oracle(
    table: &ElementTable,
    label: GroupLabel,
    degree: usize,
) -> Result<CohomologyResult, CohomError> {
    let dims = bar_oracle(table, degree)?;
    Ok(CohomologyResult {
        label,
        degree,
        dim: dims[degree],
        method: Method::BarOracle,
        resolution_ranks: None,
    })
}

/// Cohomology dimensions in degrees `0 ..= d_max` from the normalized bar
/// cochain complex with trivial coefficients.
///
/// Cochains in degree d are functions on d-tuples of non-identity elements;
/// the coboundary drops the outer entries and merges adjacent ones, with
/// merges that hit the identity discarded. Faces that coincide cancel mod 2,
/// so entries are toggled rather than set.
pub fn bar_oracle(table: &ElementTable, d_max: usize) -> Result<Vec<usize>, CohomError> {
    let n = table.order();
    if n > 16 || d_max > 4 {
        return Err(CohomError::TooLargeForOracle { order: n, degree: d_max });
    }
    let ne = n - 1;
    let dim_c = |d: usize| -> usize {
        if d == 0 {
            1
        } else {
            ne.pow(d as u32)
        }
    };
    let encode = |digits: &[usize]| -> usize {
        digits.iter().fold(0, |acc, &d| acc * ne + d)
    };
    // rank of the coboundary out of degree d, for d = 0 ..= d_max
    let mut out_ranks = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        let rows = dim_c(d + 1);
        let cols = dim_c(d);
        let mut m = BitMatrix::zeros(rows, cols);
        let mut tau = vec![0usize; d + 1];
        let toggle = |m: &mut BitMatrix, row: usize, col: usize| {
            m.set(row, col, !m.get(row, col));
        };
        for row in 0..rows {
            let mut x = row;
            for slot in tau.iter_mut().rev() {
                *slot = x % ne;
                x /= ne;
            }
            // drop the first entry
            toggle(&mut m, row, encode(&tau[1..]));
            // merge adjacent entries; a merge producing the identity is a
            // degenerate tuple and contributes nothing
            for i in 0..d {
                let prod = table.mul_indices(tau[i] + 1, tau[i + 1] + 1);
                if prod != 0 {
                    let mut sigma = Vec::with_capacity(d);
                    sigma.extend_from_slice(&tau[..i]);
                    sigma.push(prod - 1);
                    sigma.extend_from_slice(&tau[i + 2..]);
                    toggle(&mut m, row, encode(&sigma));
                }
            }
            // drop the last entry
            toggle(&mut m, row, encode(&tau[..d]));
        }
        out_ranks.push(m.rank());
    }
    let mut dims = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        let kernel = dim_c(d) - out_ranks[d];
        let image = if d == 0 { 0 } else { out_ranks[d - 1] };
        dims.push(kernel - image);
    }
    Ok(dims)
}
