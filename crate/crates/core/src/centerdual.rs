//! The center `Z(G)`, its dual, central characters of irreducibles, and the
//! restriction map sending each irreducible to its central character.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::chaingroup::{
    lattice_basis, relation_row, smith_normal_form, ChainGroupPresentation, IntMatrix,
};
use crate::charmod::ModularCharacterTable;
use crate::fusion::FusionRing;
use crate::groups::{ConjugacyClassPartition, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("element set is not abelian")]
    NotAbelian,
    #[error("element set does not contain the identity")]
    MissingIdentity,
    #[error(
        "no exponent of the order-{order} root matches irrep {irrep} on generator {generator}"
    )]
    DiscreteLog {
        irrep: usize,
        generator: usize,
        order: u64,
    },
    #[error("table has no root of unity of order {0}")]
    MissingRoot(u64),
    #[error("degree-1 labels are not closed under fusion")]
    LinearLabelsNotClosed,
    #[error("abelian decomposition failed: {0}")]
    Decomposition(&'static str),
}

/// A finite abelian group `⊕ ℤ/m_t` realized inside a permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupStructure {
    invariant_factors: Vec<u64>,
    generator_elements: Vec<usize>,
    coordinates: HashMap<usize, Vec<u64>>,
}

impl AbelianGroupStructure {
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    /// Element `t` has coordinate vector `e_t`.
    pub fn generator_elements(&self) -> &[usize] {
        &self.generator_elements
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Coordinates of a subgroup element in `⊕ ℤ/m_t`.
    pub fn coordinates(&self, element: usize) -> Option<&[u64]> {
        self.coordinates.get(&element).map(Vec::as_slice)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.coordinates.keys().copied()
    }
}

/// Invariant factors and realizing generators of the abelian subgroup with
/// element set `subset`.
///
/// The subgroup is presented on a greedy generating set with one relation
/// per edge of its Cayley graph, then reduced by Smith normal form.
pub fn abelian_invariants(
    g: &FiniteGroup,
    subset: &[usize],
) -> Result<AbelianGroupStructure, CenterError> {
    let members: HashSet<usize> = subset.iter().copied().collect();
    if !members.contains(&g.identity()) {
        return Err(CenterError::MissingIdentity);
    }
    let mut sorted: Vec<usize> = members.iter().copied().collect();
    sorted.sort_unstable();

    // greedy generators; words[a] = exponent vector reaching a from the identity
    let mut gens: Vec<usize> = Vec::new();
    let mut words: HashMap<usize, Vec<i64>> = HashMap::new();
    words.insert(g.identity(), Vec::new());
    for &s in &sorted {
        if words.contains_key(&s) {
            continue;
        }
        if gens.iter().any(|&h| g.mul(h, s) != g.mul(s, h)) {
            return Err(CenterError::NotAbelian);
        }
        gens.push(s);
        let k = gens.len();
        for w in words.values_mut() {
            w.resize(k, 0);
        }
        let mut queue: Vec<usize> = words.keys().copied().collect();
        queue.sort_unstable();
        while let Some(a) = queue.pop() {
            for (t, &gen) in gens.iter().enumerate() {
                let b = g.mul(a, gen);
                if words.contains_key(&b) {
                    continue;
                }
                if !members.contains(&b) {
                    return Err(CenterError::NotClosed);
                }
                let mut w = words[&a].clone();
                w[t] += 1;
                words.insert(b, w);
                queue.push(b);
            }
        }
    }
    if words.len() != members.len() {
        return Err(CenterError::NotClosed);
    }

    let k = gens.len();
    let mut relations = Vec::with_capacity(sorted.len() * k);
    for &a in &sorted {
        for (t, &gen) in gens.iter().enumerate() {
            let b = g.mul(a, gen);
            let mut row: Vec<(usize, i64)> = Vec::new();
            for c in 0..k {
                let v = words[&a][c] + i64::from(c == t) - words[&b][c];
                if v != 0 {
                    row.push((c, v));
                }
            }
            if !row.is_empty() {
                relations.push(row);
            }
        }
    }
    relations.sort_unstable();
    relations.dedup();
    let basis = lattice_basis(k, &relations);
    let mut matrix = IntMatrix::zeros(basis.len(), k);
    for (i, row) in basis.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            matrix.set(i, j, x);
        }
    }
    let smith = smith_normal_form(&matrix);
    let diag = smith.diagonal();
    if diag.len() < k || diag.iter().any(Zero::is_zero) {
        return Err(CenterError::Decomposition(
            "subgroup presentation is not finite",
        ));
    }
    let mut invariant_factors = Vec::new();
    let mut cols = Vec::new();
    for (t, d) in diag.iter().enumerate() {
        let d = d
            .to_u64()
            .ok_or(CenterError::Decomposition("invariant factor overflow"))?;
        if d > 1 {
            invariant_factors.push(d);
            cols.push(t);
        }
    }
    if invariant_factors.iter().product::<u64>() != members.len() as u64 {
        return Err(CenterError::Decomposition(
            "invariant factors do not multiply to the order",
        ));
    }

    let mut coordinates: HashMap<usize, Vec<u64>> = HashMap::with_capacity(sorted.len());
    let mut by_coords: HashMap<Vec<u64>, usize> = HashMap::with_capacity(sorted.len());
    for &a in &sorted {
        let w = &words[&a];
        let coords: Vec<u64> = cols
            .iter()
            .zip(&invariant_factors)
            .map(|(&t, &m)| {
                let mut acc = num_bigint::BigInt::zero();
                for (s, &ws) in w.iter().enumerate() {
                    acc += smith.v.get(s, t) * ws;
                }
                acc.mod_floor(&m.into()).to_u64().expect("reduced below m")
            })
            .collect();
        if by_coords.insert(coords.clone(), a).is_some() {
            return Err(CenterError::Decomposition("coordinates are not injective"));
        }
        coordinates.insert(a, coords);
    }
    let generator_elements = (0..invariant_factors.len())
        .map(|t| {
            let mut e = vec![0u64; invariant_factors.len()];
            e[t] = 1;
            by_coords[&e]
        })
        .collect();
    let structure = AbelianGroupStructure {
        invariant_factors,
        generator_elements,
        coordinates,
    };
    for &a in &sorted {
        for &gen in &gens {
            let sum = add_mod(
                structure.coordinates(a).unwrap(),
                structure.coordinates(gen).unwrap(),
                &structure.invariant_factors,
            );
            if structure.coordinates(g.mul(a, gen)) != Some(sum.as_slice()) {
                return Err(CenterError::Decomposition("coordinates are not additive"));
            }
        }
    }
    Ok(structure)
}

fn add_mod(a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    a.iter()
        .zip(b)
        .zip(m)
        .map(|((x, y), m)| (x + y) % m)
        .collect()
}

/// A character of `⊕ ℤ/m_t`, sending generator `z_t` to the canonical
/// order-`m_t` root of unity raised to `exponents[t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralCharacter {
    pub exponents: Vec<u64>,
}

impl CentralCharacter {
    pub fn trivial(rank: usize) -> Self {
        Self {
            exponents: vec![0; rank],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self, factors: &[u64]) -> Self {
        Self {
            exponents: add_mod(&self.exponents, &other.exponents, factors),
        }
    }

    pub fn neg(&self, factors: &[u64]) -> Self {
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(factors)
                .map(|(e, m)| (m - e) % m)
                .collect(),
        }
    }
}

/// The scalar by which irrep `irrep` acts on each center generator,
/// as a discrete log to the canonical root of the matching order.
pub fn central_character(
    table: &ModularCharacterTable,
    classes: &ConjugacyClassPartition,
    center: &AbelianGroupStructure,
    irrep: usize,
) -> Result<CentralCharacter, CenterError> {
    let f = table.field();
    let d_inv = f.inv(f.reduce(table.degrees()[irrep]));
    let exponents = center
        .generator_elements
        .iter()
        .zip(&center.invariant_factors)
        .enumerate()
        .map(|(t, (&z, &m))| {
            let omega = f.mul(table.value(irrep, classes.class_of(z)), d_inv);
            let root = table.root_of_unity(m).ok_or(CenterError::MissingRoot(m))?;
            let mut power = 1;
            for e in 0..m {
                if power == omega {
                    return Ok(e);
                }
                power = f.mul(power, root);
            }
            Err(CenterError::DiscreteLog {
                irrep,
                generator: t,
                order: m,
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(CentralCharacter { exponents })
}

/// Irrep index ↦ central character, with the two properties that make it
/// the universal comparison map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionMap {
    pub images: Vec<CentralCharacter>,
    pub factors: Vec<u64>,
    /// Images add along every fusion triple.
    pub is_tmap: bool,
    /// Every character of the center is hit.
    pub is_surjective: bool,
}

impl RestrictionMap {
    /// Irreps grouped by image, numbered by first occurrence.
    pub fn fibers(&self) -> Vec<usize> {
        let mut ids: HashMap<&CentralCharacter, usize> = HashMap::new();
        self.images
            .iter()
            .map(|c| {
                let next = ids.len();
                *ids.entry(c).or_insert(next)
            })
            .collect()
    }
}

pub fn restriction_tmap(
    table: &ModularCharacterTable,
    classes: &ConjugacyClassPartition,
    ring: &FusionRing,
    center: &AbelianGroupStructure,
) -> Result<RestrictionMap, CenterError> {
    let images: Vec<CentralCharacter> = (0..table.num_irreps())
        .map(|i| central_character(table, classes, center, i))
        .collect::<Result<_, _>>()?;
    let factors = center.invariant_factors.clone();
    let is_tmap = ring
        .triples()
        .all(|(i, j, k)| images[i].add(&images[j], &factors) == images[k]);
    let distinct = images.iter().collect::<HashSet<_>>().len();
    let is_surjective = distinct as u64 == center.order();
    Ok(RestrictionMap {
        images,
        factors,
        is_tmap,
        is_surjective,
    })
}

/// All characters of `⊕ ℤ/m_t` under componentwise addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGroup {
    pub factors: Vec<u64>,
    /// Lexicographic order; the trivial character first.
    pub characters: Vec<CentralCharacter>,
}

impl DualGroup {
    pub fn order(&self) -> usize {
        self.characters.len()
    }

    pub fn add(&self, a: &CentralCharacter, b: &CentralCharacter) -> CentralCharacter {
        a.add(b, &self.factors)
    }

    pub fn index_of(&self, c: &CentralCharacter) -> Option<usize> {
        self.characters.binary_search(c).ok()
    }
}

pub fn dual_group(center: &AbelianGroupStructure) -> DualGroup {
    let factors = center.invariant_factors.clone();
    let mut characters = vec![CentralCharacter::trivial(factors.len())];
    for (t, &m) in factors.iter().enumerate() {
        characters = characters
            .into_iter()
            .flat_map(|c| {
                (0..m).map(move |e| {
                    let mut c = c.clone();
                    c.exponents[t] = e;
                    c
                })
            })
            .collect();
    }
    characters.sort();
    DualGroup {
        factors,
        characters,
    }
}

/// Invariant factors of the group of one-dimensional labels.
///
/// Uses the `dims` data when present (labels of dimension 1), otherwise the
/// labels invertible under fusion.
pub fn abelianization_dual(ring: &FusionRing) -> Result<Vec<u64>, CenterError> {
    let linear: Vec<usize> = match ring.dims() {
        Some(d) => (0..ring.rank()).filter(|&i| d[i] == 1).collect(),
        None => ring.invertible_labels(),
    };
    let position: HashMap<usize, usize> = linear.iter().enumerate().map(|(p, &l)| (l, p)).collect();
    let mut relations = Vec::new();
    for (a, &i) in linear.iter().enumerate() {
        for (b, &j) in linear.iter().enumerate() {
            let &[(k, 1)] = ring.product(i, j) else {
                return Err(CenterError::LinearLabelsNotClosed);
            };
            let c = *position.get(&k).ok_or(CenterError::LinearLabelsNotClosed)?;
            relations.extend(relation_row(a, b, c));
        }
    }
    let unit = *position
        .get(&ring.unit())
        .ok_or(CenterError::LinearLabelsNotClosed)?;
    let labels = linear.iter().map(|&l| ring.label(l).into()).collect();
    Ok(
        ChainGroupPresentation::from_relations(labels, unit, relations)
            .invariant_factors()
            .to_vec(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmod::{
        character_table_mod_p, character_table_with_prime, next_qualifying_prime,
    };
    use crate::fusion::fusion_from_character_table;
    use crate::groups::{make_named_group, DEFAULT_ORDER_BOUND};

    fn group(name: &str, params: &[i64]) -> FiniteGroup {
        make_named_group(name, params, DEFAULT_ORDER_BOUND).unwrap()
    }

    fn setup(
        name: &str,
        params: &[i64],
    ) -> (
        FiniteGroup,
        ConjugacyClassPartition,
        ModularCharacterTable,
        FusionRing,
    ) {
        let g = group(name, params);
        let c = g.conjugacy_classes();
        let t = character_table_mod_p(&g, &c).unwrap();
        let f = fusion_from_character_table(&t).unwrap();
        (g, c, t, f)
    }

    #[test]
    fn klein_cyclic_and_trivial_subgroups() {
        let k = group("klein4", &[]);
        let all: Vec<usize> = (0..k.order()).collect();
        assert_eq!(
            abelian_invariants(&k, &all).unwrap().invariant_factors(),
            &[2, 2]
        );

        let c6 = group("cyclic", &[6]);
        let all: Vec<usize> = (0..6).collect();
        let s = abelian_invariants(&c6, &all).unwrap();
        assert_eq!(s.invariant_factors(), &[6]);
        assert_eq!(c6.element_order(s.generator_elements()[0]), 6);

        assert!(abelian_invariants(&c6, &[0])
            .unwrap()
            .invariant_factors()
            .is_empty());
    }

    #[test]
    fn generators_have_factor_orders() {
        let g = group("cyclic", &[12]);
        let h =
            crate::groups::direct_product(&g, &group("cyclic", &[2]), DEFAULT_ORDER_BOUND).unwrap();
        let all: Vec<usize> = (0..h.order()).collect();
        let s = abelian_invariants(&h, &all).unwrap();
        assert_eq!(s.invariant_factors(), &[2, 12]);
        for (&z, &m) in s.generator_elements().iter().zip(s.invariant_factors()) {
            assert_eq!(h.element_order(z), m);
        }
    }

    #[test]
    fn rejects_bad_subsets() {
        let s3 = group("symmetric", &[3]);
        assert_eq!(
            abelian_invariants(&s3, &[1, 2]),
            Err(CenterError::MissingIdentity)
        );
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(abelian_invariants(&s3, &all), Err(CenterError::NotAbelian));
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let u = (1..6)
            .find(|&x| s3.element_order(x) == 2 && x != t)
            .unwrap();
        assert_eq!(
            abelian_invariants(&s3, &[0, t, u]),
            Err(CenterError::NotAbelian)
        );
        let r = (1..6).find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(
            abelian_invariants(&s3, &[0, r]),
            Err(CenterError::NotClosed)
        );
    }

    #[test]
    fn q8_central_characters() {
        let (g, c, t, f) = setup("dicyclic", &[2]);
        let z = abelian_invariants(&g, &g.center()).unwrap();
        assert_eq!(z.invariant_factors(), &[2]);
        for i in 0..t.num_irreps() {
            let chi = central_character(&t, &c, &z, i).unwrap();
            let expected = if t.degrees()[i] == 2 { 1 } else { 0 };
            assert_eq!(chi.exponents, vec![expected]);
        }
        let r = restriction_tmap(&t, &c, &f, &z).unwrap();
        assert!(r.is_tmap && r.is_surjective);
        assert_eq!(abelianization_dual(&f).unwrap(), vec![2, 2]);
    }

    #[test]
    fn s3_maps_to_trivial_center() {
        let (g, c, t, f) = setup("symmetric", &[3]);
        let z = abelian_invariants(&g, &g.center()).unwrap();
        assert_eq!(z.order(), 1);
        let r = restriction_tmap(&t, &c, &f, &z).unwrap();
        assert!(r.images.iter().all(CentralCharacter::is_trivial));
        assert!(r.is_tmap && r.is_surjective);
        assert_eq!(abelianization_dual(&f).unwrap(), vec![2]);
    }

    #[test]
    fn abelian_groups_restrict_bijectively() {
        for n in [1i64, 4, 6, 9] {
            let (g, c, t, f) = setup("cyclic", &[n]);
            let z = abelian_invariants(&g, &g.center()).unwrap();
            let r = restriction_tmap(&t, &c, &f, &z).unwrap();
            let distinct: HashSet<_> = r.images.iter().collect();
            assert_eq!(distinct.len(), n as usize);
            assert!(r.is_tmap && r.is_surjective);
            assert_eq!(abelianization_dual(&f).unwrap(), z.invariant_factors());
        }
    }

    #[test]
    fn restriction_respects_unit_and_duals() {
        let (g, c, t, f) = setup("sl23", &[]);
        let z = abelian_invariants(&g, &g.center()).unwrap();
        let r = restriction_tmap(&t, &c, &f, &z).unwrap();
        assert!(r.images[f.unit()].is_trivial());
        for i in 0..f.rank() {
            assert_eq!(r.images[f.dual(i)], r.images[i].neg(&r.factors));
        }
    }

    #[test]
    fn central_characters_do_not_depend_on_prime() {
        let (g, c, t, _) = setup("dicyclic", &[3]);
        let z = abelian_invariants(&g, &g.center()).unwrap();
        let p2 = next_qualifying_prime(g.order() as u64, t.exponent(), t.p());
        let t2 = character_table_with_prime(&g, &c, p2).unwrap();
        for i in 0..t.num_irreps() {
            assert_eq!(
                central_character(&t, &c, &z, i),
                central_character(&t2, &c, &z, i)
            );
        }
    }

    #[test]
    fn dual_groups() {
        let mk = |factors: Vec<u64>| AbelianGroupStructure {
            invariant_factors: factors,
            generator_elements: Vec::new(),
            coordinates: HashMap::new(),
        };
        assert_eq!(dual_group(&mk(vec![])).order(), 1);
        assert_eq!(dual_group(&mk(vec![2])).order(), 2);
        let d = dual_group(&mk(vec![2, 2]));
        assert_eq!(d.order(), 4);
        for a in &d.characters {
            assert!(d.add(a, a).is_trivial());
            assert!(d.index_of(a).is_some());
        }
    }
}
