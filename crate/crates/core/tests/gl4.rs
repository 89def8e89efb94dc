//! End-to-end checks on the parabolic subgroups of GL_4(F_2): the values
//! behind the rank-4 parity certificate, plus structural cross-checks that
//! tie the matrix-group path to the permutation-group path.

use std::sync::Arc;
use std::time::Instant;

use webbcert::cohom::{build_resolution, cohomology_dim, BuildOptions, Method};
use webbcert::grpcore::{close_generators, ElementTable, GeneratorSet};
use webbcert::parabolic::{parabolic_generators, Composition, ParabolicSpec};

fn parabolic_table(parts: &[u32]) -> Arc<ElementTable> {
    let c = Composition::new(parts.to_vec());
    Arc::new(close_generators(&parabolic_generators(&c), 1 << 20).unwrap())
}

fn elem_order(t: &ElementTable, i: usize) -> usize {
    let mut p = i;
    let mut k = 1;
    while p != 0 {
        p = t.mul_indices(p, i);
        k += 1;
    }
    k
}

fn order_multiset(t: &ElementTable) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..t.order()).map(|i| elem_order(t, i)).collect();
    orders.sort_unstable();
    orders
}

#[test]
fn rank_four_borel_has_dimension_seven_in_degree_two() {
    let start = Instant::now();
    let t = parabolic_table(&[1, 1, 1, 1]);
    assert_eq!(t.order(), 64);
    assert!(t.is_two_group());
    let res = build_resolution(&t, 2, &BuildOptions::default()).unwrap();
    assert!(res.is_minimal());
    assert_eq!(res.h_dim(2).unwrap(), 7);
    assert!(
        start.elapsed().as_secs() < 10,
        "order-64 degree-2 computation must stay under ten seconds"
    );
}

#[test]
fn rank_three_borel_is_the_dihedral_group_of_order_eight() {
    let borel = parabolic_table(&[1, 1, 1]);
    assert_eq!(borel.order(), 8);
    let dihedral = Arc::new(close_generators(&GeneratorSet::dihedral(8), 64).unwrap());
    let quaternion = Arc::new(close_generators(&GeneratorSet::quaternion8(), 64).unwrap());
    assert_eq!(order_multiset(&borel), order_multiset(&dihedral));
    assert_ne!(order_multiset(&borel), order_multiset(&quaternion));
    let res_b = build_resolution(&borel, 3, &BuildOptions::default()).unwrap();
    let res_d = build_resolution(&dihedral, 3, &BuildOptions::default()).unwrap();
    assert_eq!(res_b.ranks(), res_d.ranks());
}

#[test]
fn middle_block_parabolic_has_dimension_four_in_degree_two() {
    let t = parabolic_table(&[1, 2, 1]);
    assert_eq!(t.order(), 192);
    assert!(!t.is_two_group());
    let spec = ParabolicSpec::new(Composition::new(vec![1, 2, 1]), 2);
    let r = cohomology_dim(&t, spec.label(), 2, &BuildOptions::default()).unwrap();
    assert_eq!(r.method, Method::GenericResolution);
    assert_eq!(r.dim, 4);
}

#[test]
fn block_pair_parabolic_has_dimension_four_in_degree_two() {
    let t = parabolic_table(&[2, 2]);
    assert_eq!(t.order(), 576);
    assert!(!t.is_two_group());
    let spec = ParabolicSpec::new(Composition::new(vec![2, 2]), 2);
    let r = cohomology_dim(&t, spec.label(), 2, &BuildOptions::default()).unwrap();
    assert_eq!(r.method, Method::GenericResolution);
    assert_eq!(r.dim, 4);
}

#[test]
fn mirrored_compositions_of_order_192_agree_in_degree_two() {
    let left = parabolic_table(&[1, 1, 2]);
    let right = parabolic_table(&[2, 1, 1]);
    assert_eq!(left.order(), 192);
    assert_eq!(right.order(), 192);
    let opts = BuildOptions::default();
    let l = cohomology_dim(&left, ParabolicSpec::new(Composition::new(vec![1, 1, 2]), 2).label(), 2, &opts)
        .unwrap();
    let r = cohomology_dim(&right, ParabolicSpec::new(Composition::new(vec![2, 1, 1]), 2).label(), 2, &opts)
        .unwrap();
    assert_eq!(l.dim, r.dim, "transpose inverse is an isomorphism between the two");
}

#[test]
fn mirrored_compositions_of_order_1344_agree_in_degree_two() {
    let left = parabolic_table(&[1, 3]);
    let right = parabolic_table(&[3, 1]);
    assert_eq!(left.order(), 1344);
    assert_eq!(right.order(), 1344);
    let opts = BuildOptions::default();
    let l = cohomology_dim(&left, ParabolicSpec::new(Composition::new(vec![1, 3]), 2).label(), 2, &opts)
        .unwrap();
    let r = cohomology_dim(&right, ParabolicSpec::new(Composition::new(vec![3, 1]), 2).label(), 2, &opts)
        .unwrap();
    assert_eq!(l.dim, r.dim, "transpose inverse is an isomorphism between the two");
}
