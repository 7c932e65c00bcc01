use super::*;
use crate::charmod::character_table_mod_p;
use crate::fusion::{
    cyclic_group_ring, fusion_from_character_table, ising_ring, su2_fusion_oracle, CyclicOracle,
};
use crate::groups::{make_named_group, DEFAULT_ORDER_BOUND};
use alloc::string::ToString;
use proptest::prelude::*;

fn group_ring(name: &str, params: &[i64]) -> FusionRing {
    let g = make_named_group(name, params, DEFAULT_ORDER_BOUND).unwrap();
    let c = g.conjugacy_classes();
    fusion_from_character_table(&character_table_mod_p(&g, &c).unwrap()).unwrap()
}

/// Group ring of ℤ/a × ℤ/b with label `x·b + y` for `(x, y)`.
fn product_cyclic_ring(a: usize, b: usize) -> FusionRing {
    let n = a * b;
    let labels = (0..n).map(|l| l.to_string()).collect();
    let add = |l: usize, m: usize| ((l / b + m / b) % a) * b + (l % b + m % b) % b;
    let dual = (0..n)
        .map(|l| add(0, ((a - l / b) % a) * b + (b - l % b) % b))
        .collect();
    let products = (0..n * n)
        .map(|lm| vec![(add(lm / n, lm % n), 1)])
        .collect();
    FusionRing::new(labels, 0, dual, products, Some(vec![1; n])).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_invariants(p: &ChainGroupPresentation, ring: &FusionRing) {
    assert!(p.respects_relations());
    assert!(p.invariant_factors().windows(2).all(|w| w[1] % w[0] == 0));
    assert!(p.projection(ring.unit()).iter().all(|&x| x == 0));
    for i in 0..ring.rank() {
        assert_eq!(
            p.projection(ring.dual(i)),
            p.neg(p.projection(i)).as_slice()
        );
    }
    for (i, j, k) in ring.triples() {
        assert_eq!(p.add(p.projection(i), p.projection(j)), p.projection(k));
    }
}

#[test]
fn cyclic_rings() {
    for n in 1..=12 {
        let ring = cyclic_group_ring(n);
        let p = chain_group_snf(&ring);
        check_invariants(&p, &ring);
        let expected: Vec<u64> = if n == 1 { vec![] } else { vec![n as u64] };
        assert_eq!(p.invariant_factors(), expected.as_slice());
        assert_eq!(p.free_rank(), 0);
        let classes = chain_classes_union_find(&ring).unwrap();
        assert_eq!(classes.class_count(), n);
        assert_eq!(class_group_structure(&classes), expected);
        assert!(compare_chain_groups(&p, &classes));
    }
}

#[test]
fn z3_classes_are_singletons_with_cyclic_table() {
    let classes = chain_classes_union_find(&cyclic_group_ring(3)).unwrap();
    assert_eq!(classes.class_map(), &[0, 1, 2]);
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(classes.product(a, b), (a + b) % 3);
        }
    }
    assert_eq!(classes.inverse_of(1), 2);
}

#[test]
fn s3_is_trivial() {
    let ring = group_ring("symmetric", &[3]);
    let p = chain_group_snf(&ring);
    check_invariants(&p, &ring);
    assert!(p.invariant_factors().is_empty());
    assert_eq!(p.free_rank(), 0);
    let classes = chain_classes_union_find(&ring).unwrap();
    assert_eq!(classes.class_count(), 1);
    assert!(class_group_structure(&classes).is_empty());
    assert!(compare_chain_groups(&p, &classes));
}

#[test]
fn q8_has_two_classes() {
    let ring = group_ring("dicyclic", &[2]);
    let p = chain_group_snf(&ring);
    check_invariants(&p, &ring);
    assert_eq!(p.invariant_factors(), &[2]);
    let classes = chain_classes_union_find(&ring).unwrap();
    assert_eq!(classes.class_count(), 2);
    let linear: Vec<usize> = (0..5).filter(|&i| ring.dims().unwrap()[i] == 1).collect();
    assert_eq!(classes.members(classes.class_of(ring.unit())), linear);
    assert_eq!(class_group_structure(&classes), vec![2]);
    assert!(compare_chain_groups(&p, &classes));
}

#[test]
fn permuted_class_map_is_rejected() {
    let ring = group_ring("dicyclic", &[2]);
    let p = chain_group_snf(&ring);
    let classes = chain_classes_union_find(&ring).unwrap();
    assert!(!compare_chain_groups(&p, &classes.relabeled(&[1, 0])));
}

#[test]
fn ising_is_z2() {
    let ring = ising_ring();
    let p = chain_group_snf(&ring);
    check_invariants(&p, &ring);
    assert_eq!(p.invariant_factors(), &[2]);
    let eps = ring.index_of("eps").unwrap();
    let sigma = ring.index_of("sigma").unwrap();
    assert_eq!(p.projection(eps), p.projection(ring.unit()));
    assert_ne!(p.projection(sigma), p.projection(ring.unit()));
    let classes = chain_classes_union_find(&ring).unwrap();
    assert!(compare_chain_groups(&p, &classes));
}

#[test]
fn klein_and_z6_structures() {
    assert_eq!(
        chain_group_snf(&product_cyclic_ring(2, 2)).invariant_factors(),
        &[2, 2]
    );
    let z6 = cyclic_group_ring(6);
    assert_eq!(
        class_group_structure(&chain_classes_union_find(&z6).unwrap()),
        vec![6]
    );
}

#[test]
fn relation_rows_are_canonical() {
    assert_eq!(relation_row(0, 0, 0), Some(vec![(0, 1)]));
    assert_eq!(relation_row(2, 1, 2), Some(vec![(1, 1)]));
    assert_eq!(relation_row(3, 3, 1), Some(vec![(1, -1), (3, 2)]));
    assert_eq!(relation_row(1, 2, 0), Some(vec![(0, -1), (1, 1), (2, 1)]));
}

#[test]
fn duplicate_relations_are_removed() {
    let ring = group_ring("symmetric", &[3]);
    let p = chain_group_snf(&ring);
    let mut rows = p.relations().to_vec();
    let before = rows.len();
    rows.dedup();
    assert_eq!(rows.len(), before);
    assert!(before < ring.triples().count());
}

#[test]
fn non_commutative_class_product_is_reported() {
    // ℤ/3 with a reversed table on one pair is not a ring, but the class
    // builder must still refuse to produce a bogus group law.
    let n = 3;
    let labels = (0..n).map(|i| i.to_string()).collect();
    let mut products: Vec<Vec<(usize, u64)>> = (0..n * n)
        .map(|ij| vec![((ij / n + ij % n) % n, 1)])
        .collect();
    products[n + 2] = vec![(2, 1)];
    let ring = FusionRing::from_raw(labels, 0, vec![0, 2, 1], products, None).unwrap();
    assert!(chain_classes_union_find(&ring).is_err());
}

#[test]
fn su2_levels() {
    let report = truncated_chain_group(&su2_fusion_oracle(), 5);
    assert_eq!(report.levels.len(), 5);
    for level in &report.levels {
        assert_eq!(
            level.presentation.invariant_factors(),
            &[2],
            "level {}",
            level.level
        );
        let p = &level.presentation;
        for (i, &spin) in level.window.iter().enumerate() {
            assert_eq!(p.projection(i) == p.projection(0), spin % 2 == 0);
        }
    }
    assert_eq!(report.stabilized, Some(true));

    let one = truncated_chain_group(&su2_fusion_oracle(), 1);
    assert_eq!(one.levels[0].window, vec![0, 1]);
    assert_eq!(one.levels[0].presentation.invariant_factors(), &[2]);
    assert_eq!(one.stabilized, None);
}

#[test]
fn lazy_cyclic_oracle() {
    for l in 1..4 {
        let report = truncated_chain_group(&CyclicOracle { n: 4 }, l);
        assert!(report
            .levels
            .iter()
            .all(|lv| lv.presentation.invariant_factors() == [4]));
    }
}

#[test]
fn window_without_relations_is_free() {
    struct Sparse;
    impl crate::fusion::FusionOracle for Sparse {
        fn unit(&self) -> u64 {
            0
        }
        fn dual(&self, l: u64) -> u64 {
            l
        }
        fn fuse(&self, a: u64, b: u64) -> Vec<(u64, u64)> {
            vec![(a + b + 1, 1)]
        }
        fn window(&self, level: usize) -> Vec<u64> {
            (0..=level as u64).collect()
        }
    }
    let lv = truncation_level(&Sparse, 0);
    assert_eq!(lv.presentation.free_rank(), 1);
    assert_eq!(lv.presentation.order(), None);
}

proptest! {
    #[test]
    fn two_cyclic_factors(a in 1usize..8, b in 1usize..8) {
        let ring = product_cyclic_ring(a, b);
        let p = chain_group_snf(&ring);
        check_invariants(&p, &ring);
        let (g, l) = (gcd(a as u64, b as u64), (a * b) as u64 / gcd(a as u64, b as u64));
        let expected: Vec<u64> = [g, l].into_iter().filter(|&x| x > 1).collect();
        prop_assert_eq!(p.invariant_factors(), expected.as_slice());
        let classes = chain_classes_union_find(&ring).unwrap();
        prop_assert!(compare_chain_groups(&p, &classes));
    }
}
