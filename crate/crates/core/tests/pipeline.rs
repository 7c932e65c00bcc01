//! End-to-end properties of the analysis pipeline on whole groups.

use chaingroup_core::chaingroup::chain_group_snf;
use chaingroup_core::fusion::FusionRing;
use chaingroup_core::groups::{
    default_catalog, FiniteGroup, GroupSpec, Permutation, DEFAULT_ORDER_BOUND,
};
use chaingroup_core::verify::{verify_group, DEFAULT_MODULI};
use chaingroup_core::GroupAnalysis;
use proptest::prelude::*;

fn moduli() -> Vec<u64> {
    DEFAULT_MODULI.collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn every_catalog_group_verifies() {
    for entry in default_catalog() {
        let g = entry.spec.build(DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(g.order(), entry.order, "{}", entry.id);
        let a = GroupAnalysis::new(g).unwrap();
        let report = verify_group(entry.id.clone(), &a, &moduli());
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{}: {failures:?}", entry.id);
    }
}

/// Permutes the labels of a ring; the chain group must not notice.
fn relabel(ring: &FusionRing, perm: &[usize]) -> FusionRing {
    let n = ring.rank();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let labels = (0..n).map(|i| ring.label(inv[i]).to_string()).collect();
    let dual = (0..n).map(|i| perm[ring.dual(inv[i])]).collect();
    let products = (0..n * n)
        .map(|ij| {
            let (i, j) = (inv[ij / n], inv[ij % n]);
            ring.product(i, j)
                .iter()
                .map(|&(k, m)| (perm[k], m))
                .collect()
        })
        .collect();
    let dims = ring.dims().map(|d| (0..n).map(|i| d[inv[i]]).collect());
    FusionRing::new(labels, perm[ring.unit()], dual, products, dims).unwrap()
}

fn small_permutation_group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(
                    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle(),
                    1..=2,
                ),
            )
        })
        .prop_map(|(n, gens)| {
            let gens = gens
                .into_iter()
                .map(|g| Permutation::from_images(g).unwrap())
                .collect();
            FiniteGroup::new(n, gens).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_permutation_groups_verify(g in small_permutation_group()) {
        let center_order = g.center().len() as u64;
        let a = GroupAnalysis::new(g).unwrap();
        let report = verify_group("random", &a, &[2, 3, 4, 6]);
        prop_assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        prop_assert_eq!(a.ring.presentation.order(), Some(center_order));
    }

    #[test]
    fn abelian_products_are_their_own_center(x in 1i64..=8, y in 1i64..=8) {
        let spec = GroupSpec::product(vec![GroupSpec::named("cyclic", &[x]), GroupSpec::named("cyclic", &[y])]);
        let a = GroupAnalysis::new(spec.build(DEFAULT_ORDER_BOUND).unwrap()).unwrap();
        let (x, y) = (x as u64, y as u64);
        let g = gcd(x, y);
        let expected: Vec<u64> = [g, x * y / g].into_iter().filter(|&f| f > 1).collect();
        prop_assert_eq!(a.ring.presentation.invariant_factors(), expected.as_slice());
        prop_assert_eq!(a.center.invariant_factors(), expected.as_slice());
    }

    #[test]
    fn relabeling_preserves_the_chain_group(idx in 0usize..20, picks in prop::collection::vec(any::<prop::sample::Index>(), 64)) {
        let entry = &default_catalog()[idx];
        let a = GroupAnalysis::new(entry.spec.build(DEFAULT_ORDER_BOUND).unwrap()).unwrap();
        let ring = &a.ring.ring;
        let n = ring.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, picks[i % picks.len()].index(i + 1));
        }
        let p = chain_group_snf(&relabel(ring, &perm));
        prop_assert_eq!(p.invariant_factors(), a.ring.presentation.invariant_factors());
    }
}
