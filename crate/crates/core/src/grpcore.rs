//! Concrete finite groups, enumerated element by element.
//!
//! A group is given by a [`GeneratorSet`]: either permutations (image lists
//! on a fixed number of points) or invertible matrices over F_2 (row-major
//! bit strings, dimension at most 8). [`close_generators`] runs a
//! breadth-first closure, assigning each element its first-discovery index,
//! with the identity always at index 0. The resulting [`ElementTable`]
//! records, for each generator, the permutation of indices induced by left
//! multiplication, plus the inverse of every element and the BFS parent link
//! that lets callers replay any element as a word in the generators.
//!
//! Discovery order is a pure function of the generator list, so downstream
//! computations on the table are reproducible bit for bit.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    /// Closure found more elements than the caller allowed.
    #[error("group closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    /// An operation that only makes sense for 2-groups was asked of a group
    /// with odd part {odd_part}.
    #[error("not a 2-group: order has odd part {odd_part}")]
    NotA2Group { odd_part: usize },
}

/// What kind of object the elements of a group are.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElemKind {
    Permutation,
    MatrixF2,
}

/// A single group element in canonical encoding.
///
/// Permutations store the image list; matrices store row-major bits, entry
/// `(i, j)` at bit `i * dim + j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Elem {
    Perm(Vec<u8>),
    Mat { dim: u8, bits: u64 },
}

impl Elem {
    fn identity(kind: ElemKind, degree: usize) -> Elem {
        match kind {
            ElemKind::Permutation => Elem::Perm((0..degree as u8).collect()),
            ElemKind::MatrixF2 => Elem::Mat { dim: degree as u8, bits: mat_identity(degree) },
        }
    }

    /// Group product `self * rhs`. For permutations this is composition,
    /// `(a * b)(p) = a(b(p))`; for matrices the usual product over F_2.
    #[must_use]
    pub fn mul(&self, rhs: &Elem) -> Elem {
        match (self, rhs) {
            (Elem::Perm(a), Elem::Perm(b)) => {
                assert_eq!(a.len(), b.len(), "degree mismatch");
                Elem::Perm(b.iter().map(|&p| a[p as usize]).collect())
            }
            (Elem::Mat { dim: da, bits: a }, Elem::Mat { dim: db, bits: b }) => {
                assert_eq!(da, db, "dimension mismatch");
                Elem::Mat { dim: *da, bits: mat_mul(*a, *b, *da as usize) }
            }
            _ => panic!("cannot multiply elements of different kinds"),
        }
    }

    #[must_use]
    pub fn inverse(&self) -> Elem {
        match self {
            Elem::Perm(p) => {
                let mut inv = vec![0u8; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    inv[x as usize] = i as u8;
                }
                Elem::Perm(inv)
            }
            Elem::Mat { dim, bits } => Elem::Mat {
                dim: *dim,
                bits: mat_inverse(*bits, *dim as usize).expect("matrix generator must be invertible"),
            },
        }
    }
}

fn mat_identity(dim: usize) -> u64 {
    let mut bits = 0u64;
    for i in 0..dim {
        bits |= 1 << (i * dim + i);
    }
    bits
}

fn mat_mul(a: u64, b: u64, dim: usize) -> u64 {
    let row_mask = (1u64 << dim) - 1;
    let mut out = 0u64;
    for i in 0..dim {
        let mut arow = (a >> (i * dim)) & row_mask;
        let mut orow = 0u64;
        while arow != 0 {
            let k = arow.trailing_zeros() as usize;
            arow &= arow - 1;
            orow ^= (b >> (k * dim)) & row_mask;
        }
        out |= orow << (i * dim);
    }
    out
}

/// Gauss-Jordan inverse of a bit-packed matrix; None when singular.
fn mat_inverse(a: u64, dim: usize) -> Option<u64> {
    let row_mask = (1u64 << dim) - 1;
    // Each entry: low bits the evolving matrix row, high bits the inverse row.
    let mut work: Vec<(u64, u64)> = (0..dim)
        .map(|i| ((a >> (i * dim)) & row_mask, 1u64 << i))
        .collect();
    for c in 0..dim {
        let pivot = (c..dim).find(|&r| work[r].0 >> c & 1 == 1)?;
        work.swap(c, pivot);
        let (prow, pinv) = work[c];
        for r in 0..dim {
            if r != c && work[r].0 >> c & 1 == 1 {
                work[r].0 ^= prow;
                work[r].1 ^= pinv;
            }
        }
    }
    let mut out = 0u64;
    for (i, &(_, inv)) in work.iter().enumerate() {
        out |= inv << (i * dim);
    }
    Some(out)
}

/// Generators for a group, all of one kind and one degree.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    kind: ElemKind,
    degree: usize,
    gens: Vec<Elem>,
}

impl GeneratorSet {
    /// Permutation generators as image lists on `degree` points.
    ///
    /// # Panics
    /// Panics if any list is not a bijection of `0..degree`.
    #[must_use]
    pub fn from_perms(degree: usize, perms: Vec<Vec<u8>>) -> Self {
        for p in &perms {
            assert_eq!(p.len(), degree, "permutation degree mismatch");
            let mut seen = vec![false; degree];
            for &x in p {
                assert!((x as usize) < degree && !seen[x as usize], "not a permutation: {p:?}");
                seen[x as usize] = true;
            }
        }
        GeneratorSet { kind: ElemKind::Permutation, degree, gens: perms.into_iter().map(Elem::Perm).collect() }
    }

    /// Matrix generators over F_2, row-major bits, `dim <= 8`.
    ///
    /// # Panics
    /// Panics if `dim > 8` or any matrix is singular.
    #[must_use]
    pub fn from_matrices(dim: usize, mats: Vec<u64>) -> Self {
        assert!(dim >= 1 && dim <= 8, "matrix dimension must be 1..=8");
        for &m in &mats {
            assert!(mat_inverse(m, dim).is_some(), "matrix generator is singular");
        }
        GeneratorSet {
            kind: ElemKind::MatrixF2,
            degree: dim,
            gens: mats.into_iter().map(|bits| Elem::Mat { dim: dim as u8, bits }).collect(),
        }
    }

    /// Cyclic group of order `n` as a single `n`-cycle.
    #[must_use]
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        if n == 1 {
            return GeneratorSet::from_perms(1, vec![]);
        }
        let cycle: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        GeneratorSet::from_perms(n, vec![cycle])
    }

    /// Dihedral group of the given order `2n`, acting on `n` points.
    #[must_use]
    pub fn dihedral(order: usize) -> Self {
        assert!(order >= 4 && order % 2 == 0, "dihedral order must be even and at least 4");
        let n = order / 2;
        let rot: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        let refl: Vec<u8> = (0..n).map(|i| (n - 1 - i) as u8).collect();
        GeneratorSet::from_perms(n, vec![rot, refl])
    }

    /// Quaternion group of order 8 in its regular permutation action.
    ///
    /// Points are 1, -1, i, -i, j, -j, k, -k in that order; the generators
    /// are left multiplication by i and by j.
    #[must_use]
    pub fn quaternion8() -> Self {
        let by_i = vec![2, 3, 1, 0, 6, 7, 5, 4];
        let by_j = vec![4, 5, 7, 6, 1, 0, 2, 3];
        GeneratorSet::from_perms(8, vec![by_i, by_j])
    }

    /// Elementary abelian 2-group of the given order `2^k`, one point swap
    /// per generator.
    #[must_use]
    pub fn elem_abelian(order: usize) -> Self {
        assert!(order >= 1 && order.is_power_of_two(), "order must be a power of two");
        let k = order.trailing_zeros() as usize;
        if k == 0 {
            return GeneratorSet::from_perms(1, vec![]);
        }
        let degree = 2 * k;
        let gens = (0..k)
            .map(|i| {
                let mut p: Vec<u8> = (0..degree as u8).collect();
                p.swap(2 * i, 2 * i + 1);
                p
            })
            .collect();
        GeneratorSet::from_perms(degree, gens)
    }

    /// Direct product of two permutation groups, acting on the disjoint
    /// union of their points.
    #[must_use]
    pub fn direct_product(a: &GeneratorSet, b: &GeneratorSet) -> Self {
        assert!(
            a.kind == ElemKind::Permutation && b.kind == ElemKind::Permutation,
            "direct products are implemented for permutation groups"
        );
        let degree = a.degree + b.degree;
        let mut gens = Vec::new();
        for g in &a.gens {
            let Elem::Perm(p) = g else { unreachable!() };
            let mut q: Vec<u8> = (0..degree as u8).collect();
            q[..a.degree].copy_from_slice(p);
            gens.push(q);
        }
        for g in &b.gens {
            let Elem::Perm(p) = g else { unreachable!() };
            let mut q: Vec<u8> = (0..degree as u8).collect();
            for (i, &x) in p.iter().enumerate() {
                q[a.degree + i] = a.degree as u8 + x;
            }
            gens.push(q);
        }
        GeneratorSet::from_perms(degree, gens)
    }

    #[must_use]
    pub fn kind(&self) -> ElemKind {
        self.kind
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Canonical text name for a group, used as the ledger key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupLabel(String);

impl GroupLabel {
    #[must_use]
    pub fn new(label: impl Into<String>) -> Self {
        GroupLabel(label.into())
    }

    #[must_use]
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Fully enumerated group.
///
/// Index 0 is the identity. `gen_actions[k][i]` is the index of
/// `gens[k] * element[i]`, and for every non-identity element `i`,
/// `parent(i) = (k, p)` satisfies `element[i] = gens[k] * element[p]`
/// with `p < i`.
pub struct ElementTable {
    kind: ElemKind,
    degree: usize,
    gens: Vec<Elem>,
    elements: Vec<Elem>,
    index: HashMap<Elem, u32>,
    gen_actions: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    parents: Vec<(u32, u32)>,
}

/// Breadth-first closure of a generator set.
///
/// Fails with [`GroupError::CapExceeded`] as soon as more than `cap`
/// elements are discovered; the partial table is discarded.
pub fn close_generators(gens: &GeneratorSet, cap: usize) -> Result<ElementTable, GroupError> {
    assert!(cap >= 1, "cap must be positive");
    let id = Elem::identity(gens.kind, gens.degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0u32);
    let mut parents = vec![(0u32, 0u32)];
    let mut gen_actions: Vec<Vec<u32>> = vec![Vec::new(); gens.gens.len()];

    let mut head = 0usize;
    while head < elements.len() {
        let current = elements[head].clone();
        for (k, g) in gens.gens.iter().enumerate() {
            let product = g.mul(&current);
            let idx = match index.get(&product) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    let i = elements.len() as u32;
                    index.insert(product.clone(), i);
                    elements.push(product);
                    parents.push((k as u32, head as u32));
                    i
                }
            };
            gen_actions[k].push(idx);
        }
        head += 1;
    }

    let inverse = elements
        .iter()
        .map(|e| index[&e.inverse()])
        .collect();

    Ok(ElementTable {
        kind: gens.kind,
        degree: gens.degree,
        gens: gens.gens.clone(),
        elements,
        index,
        gen_actions,
        inverse,
        parents,
    })
}

impl ElementTable {
    #[must_use]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[must_use]
    pub fn kind(&self) -> ElemKind {
        self.kind
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    #[must_use]
    pub fn generator(&self, k: usize) -> &Elem {
        &self.gens[k]
    }

    #[must_use]
    pub fn element(&self, i: usize) -> &Elem {
        &self.elements[i]
    }

    /// Index of a canonical encoding, if it belongs to the group.
    #[must_use]
    pub fn index_of(&self, e: &Elem) -> Option<usize> {
        self.index.get(e).map(|&i| i as usize)
    }

    /// Left-multiplication action of generator `k` on element indices.
    #[must_use]
    pub fn gen_action(&self, k: usize) -> &[u32] {
        &self.gen_actions[k]
    }

    /// BFS parent of a non-identity element: `(k, p)` with
    /// `element[i] = gens[k] * element[p]`.
    ///
    /// # Panics
    /// Panics for the identity, which has no parent.
    #[must_use]
    pub fn parent(&self, i: usize) -> (usize, usize) {
        assert!(i > 0, "identity has no parent");
        let (k, p) = self.parents[i];
        (k as usize, p as usize)
    }

    /// Index of `element[a] * element[b]`.
    #[must_use]
    pub fn mul_indices(&self, a: usize, b: usize) -> usize {
        let product = self.elements[a].mul(&self.elements[b]);
        self.index[&product] as usize
    }

    /// Index of the inverse of `element[i]`.
    #[must_use]
    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Splits the order as `2^a * m` with `m` odd, returned as `(2^a, m)`.
    #[must_use]
    pub fn order_factorization(&self) -> (usize, usize) {
        let mut m = self.order();
        let mut two_part = 1;
        while m % 2 == 0 {
            m /= 2;
            two_part *= 2;
        }
        (two_part, m)
    }

    #[must_use]
    pub fn is_two_group(&self) -> bool {
        self.order_factorization().1 == 1
    }

    /// Subgroup generated by the given element indices, as a sorted index list.
    #[must_use]
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &s in seed {
                let y = self.mul_indices(s, x);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Minimal number of generators of a 2-group, read off from the index of
    /// its Frattini subgroup.
    ///
    /// The Frattini subgroup of a 2-group is generated by the squares of all
    /// elements (commutators come along for free, since a group in which
    /// every square is trivial is abelian). The rank is the 2-logarithm of
    /// the index.
    pub fn frattini_rank(&self) -> Result<usize, GroupError> {
        let (_, odd) = self.order_factorization();
        if odd != 1 {
            return Err(GroupError::NotA2Group { odd_part: odd });
        }
        let mut seed: Vec<usize> = (0..self.order()).map(|i| self.mul_indices(i, i)).collect();
        // generator commutators, cheap and harmless to include
        for a in 0..self.gens.len() {
            for b in 0..self.gens.len() {
                let ga = self.index[&self.gens[a]] as usize;
                let gb = self.index[&self.gens[b]] as usize;
                let inv = self.mul_indices(self.inverse_of(ga), self.inverse_of(gb));
                let comm = self.mul_indices(inv, self.mul_indices(ga, gb));
                seed.push(comm);
            }
        }
        seed.sort_unstable();
        seed.dedup();
        let phi = self.subgroup_closure(&seed);
        let index = self.order() / phi.len();
        assert!(
            index.is_power_of_two() && self.order() % phi.len() == 0,
            "Frattini index must be a power of two"
        );
        Ok(index.trailing_zeros() as usize)
    }
}

impl fmt::Debug for ElementTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ElementTable {{ kind: {:?}, degree: {}, order: {}, generators: {} }}",
            self.kind,
            self.degree,
            self.order(),
            self.gens.len()
        )
    }
}
