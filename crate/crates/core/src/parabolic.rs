//! Compositions of an integer and the parabolic subgroups of GL_r(F_q)
//! they index.
//!
//! An ordered partition (composition) of r picks out the subgroup of
//! block-upper-triangular matrices with the given diagonal block sizes.
//! The Borel subgroup comes from (1, ..., 1), the whole group from (r).
//! Orders follow the standard formula
//!
//! ```text
//! |P(l)| = q^(sum over i < j of l_i * l_j) * prod_i |GL(l_i, q)|
//! ```
//!
//! and for q = 2 the module also builds explicit matrix generators so the
//! groups can be enumerated and fed to the cohomology engine.

use num_bigint::BigUint;

use crate::grpcore::{GeneratorSet, GroupLabel};

/// Ordered partition of a positive integer into positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// # Panics
    /// Panics if `parts` is empty or contains a zero.
    #[must_use]
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "composition needs at least one part");
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Composition { parts }
    }

    #[must_use]
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    #[must_use]
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Reversal of the part list.
    #[must_use]
    pub fn dual(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Palindromic compositions are their own dual.
    #[must_use]
    pub fn is_symmetric(&self) -> bool {
        self.parts.iter().eq(self.parts.iter().rev())
    }

    /// Everything except the single-part composition (r).
    #[must_use]
    pub fn is_proper(&self) -> bool {
        self.parts.len() > 1
    }

    /// Ledger-label spelling: parts joined by `+`.
    #[must_use]
    pub fn plus_joined(&self) -> String {
        self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join("+")
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All 2^(r-1) compositions of `r`, in lexicographic order of their part
/// lists, so (1,1,...,1) comes first and (r) last.
#[must_use]
pub fn compositions(r: u32) -> Vec<Composition> {
    assert!(r >= 1, "r must be positive");
    let mut out = Vec::with_capacity(1 << (r - 1));
    let mut current = Vec::new();
    fn rec(rem: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition { parts: current.clone() });
            return;
        }
        for first in 1..=rem {
            current.push(first);
            rec(rem - first, current, out);
            current.pop();
        }
    }
    rec(r, &mut current, &mut out);
    out
}

/// The palindromic compositions of `r`, optionally excluding (r) itself.
/// Order is inherited from [`compositions`].
#[must_use]
pub fn symmetric_compositions(r: u32, proper_only: bool) -> Vec<Composition> {
    compositions(r)
        .into_iter()
        .filter(|c| c.is_symmetric() && (!proper_only || c.is_proper()))
        .collect()
}

/// Order of GL_n(F_q): product over i in [0, n) of (q^n - q^i).
/// By convention GL_0 has order 1.
#[must_use]
pub fn gl_order(n: u32, q: u64) -> BigUint {
    assert!(q >= 2, "q must be at least 2");
    let q = BigUint::from(q);
    let qn = q.pow(n);
    let mut order = BigUint::from(1u32);
    for i in 0..n {
        order *= &qn - q.pow(i);
    }
    order
}

/// Order of the parabolic subgroup of GL_r(F_q) attached to a composition:
/// the unipotent radical contributes q to the power of the number of
/// above-diagonal block positions, the Levi factor one GL per part.
#[must_use]
pub fn parabolic_order(c: &Composition, q: u64) -> BigUint {
    let parts = c.parts();
    let mut exponent = 0u32;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            exponent += parts[i] * parts[j];
        }
    }
    let mut order = BigUint::from(q).pow(exponent);
    for &p in parts {
        order *= gl_order(p, q);
    }
    order
}

/// A composition together with the field size, naming one parabolic subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicSpec {
    composition: Composition,
    q: u64,
}

impl ParabolicSpec {
    /// # Panics
    /// Panics if `q < 2`.
    #[must_use]
    pub fn new(composition: Composition, q: u64) -> Self {
        assert!(q >= 2, "q must be at least 2");
        ParabolicSpec { composition, q }
    }

    #[must_use]
    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    #[must_use]
    pub fn q(&self) -> u64 {
        self.q
    }

    #[must_use]
    pub fn rank(&self) -> u32 {
        self.composition.total()
    }

    #[must_use]
    pub fn order(&self) -> BigUint {
        parabolic_order(&self.composition, self.q)
    }

    /// Ledger key, e.g. `GL(q=2,r=6):P(1+4+1)`.
    #[must_use]
    pub fn label(&self) -> GroupLabel {
        GroupLabel::new(format!(
            "GL(q={},r={}):P({})",
            self.q,
            self.rank(),
            self.composition.plus_joined()
        ))
    }
}

/// Matrix generators for a parabolic subgroup of GL_r(F_2).
///
/// Per diagonal block of size m >= 2 this emits the adjacent transvections
/// `e + E(i, i+1)` and `e + E(i+1, i)` in block coordinates, which generate
/// that GL factor; per matrix position above the block diagonal it emits the
/// single transvection `e + E(a, b)`, and together these close to the whole
/// unipotent radical. The generator order is fixed: blocks first, then the
/// above-diagonal positions row by row.
///
/// # Panics
/// Panics if the composition total exceeds 8 (element encoding limit).
#[must_use]
pub fn parabolic_generators(c: &Composition) -> GeneratorSet {
    let r = c.total() as usize;
    assert!(r <= 8, "generator construction is limited to r <= 8");
    let transvection = |a: usize, b: usize| -> u64 {
        let mut bits = 0u64;
        for i in 0..r {
            bits |= 1 << (i * r + i);
        }
        bits | 1 << (a * r + b)
    };
    let mut gens = Vec::new();
    let mut offset = 0usize;
    let mut block_of = vec![0usize; r];
    for (bi, &p) in c.parts().iter().enumerate() {
        let m = p as usize;
        for i in 0..m.saturating_sub(1) {
            gens.push(transvection(offset + i, offset + i + 1));
            gens.push(transvection(offset + i + 1, offset + i));
        }
        for i in 0..m {
            block_of[offset + i] = bi;
        }
        offset += m;
    }
    for a in 0..r {
        for b in 0..r {
            if block_of[a] < block_of[b] {
                gens.push(transvection(a, b));
            }
        }
    }
    GeneratorSet::from_matrices(r, gens)
}
