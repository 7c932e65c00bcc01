//! Exhaustive checks relating the chain group, the center and t-maps.
//!
//! A t-map into an abelian group `A` is a map `φ` on labels with
//! `φ(k) = φ(i) + φ(j)` whenever `N_ij^k > 0`. Maps into `ℤ/m` are
//! enumerated exactly, so statements about arbitrary targets are checked
//! for the finite cyclic ones.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::analysis::{GroupAnalysis, RingAnalysis};
use crate::centerdual::{dual_group, CentralCharacter};
use crate::chaingroup::{class_group_structure, compare_chain_groups, ChainGroupPresentation};
use crate::fusion::FusionRing;

/// Moduli checked when none are given.
pub const DEFAULT_MODULI: core::ops::RangeInclusive<u64> = 2..=12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatementId {
    /// Chain group ≅ dual of the center, via equal label fibers.
    ChainCenterIsomorphism,
    /// Smith-form and union-find chain groups agree, fibers included.
    ChainDefinitionsAgree,
    /// The subring generated by constituents of `Y ⊗ Ȳ` is exactly the
    /// labels trivial on the center.
    C0IsCenterTrivial,
    /// Labels projecting to zero in the chain group are exactly `C0`.
    ProjectionKernelIsC0,
    /// The chain projection sends the unit to 0 and duals to negatives.
    ProjectionTmapBasics,
    /// The restriction map sends the unit to 0 and duals to negatives.
    RestrictionTmapBasics,
    /// t-maps into `ℤ/m` are exactly the homomorphisms out of the chain group.
    TmapEnumeration,
    /// Every t-map into `ℤ/m` factors through the restriction map.
    FactorsThroughCenterDual,
}

impl StatementId {
    pub const ALL: [StatementId; 8] = [
        StatementId::ChainCenterIsomorphism,
        StatementId::ChainDefinitionsAgree,
        StatementId::C0IsCenterTrivial,
        StatementId::ProjectionKernelIsC0,
        StatementId::ProjectionTmapBasics,
        StatementId::RestrictionTmapBasics,
        StatementId::TmapEnumeration,
        StatementId::FactorsThroughCenterDual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::ChainCenterIsomorphism => "chain_center_isomorphism",
            StatementId::ChainDefinitionsAgree => "chain_definitions_agree",
            StatementId::C0IsCenterTrivial => "c0_is_center_trivial",
            StatementId::ProjectionKernelIsC0 => "projection_kernel_is_c0",
            StatementId::ProjectionTmapBasics => "projection_tmap_basics",
            StatementId::RestrictionTmapBasics => "restriction_tmap_basics",
            StatementId::TmapEnumeration => "tmap_enumeration",
            StatementId::FactorsThroughCenterDual => "factors_through_center_dual",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    NotApplicable { reason: String },
}

impl Outcome {
    fn fail(witness: impl Into<String>) -> Self {
        Outcome::Fail {
            witness: witness.into(),
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementResult {
    pub id: StatementId,
    pub outcome: Outcome,
    /// Short description of what was compared, e.g. the orders involved.
    pub detail: String,
}

impl StatementResult {
    fn new(id: StatementId, outcome: Outcome, detail: impl Into<String>) -> Self {
        Self {
            id,
            outcome,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    /// Sorted by statement id.
    pub results: Vec<StatementResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        !self.results.iter().any(|r| r.outcome.is_fail())
    }

    pub fn failures(&self) -> impl Iterator<Item = &StatementResult> {
        self.results.iter().filter(|r| r.outcome.is_fail())
    }

    pub fn get(&self, id: StatementId) -> Option<&StatementResult> {
        self.results.iter().find(|r| r.id == id)
    }
}

fn label_pair(ring: &FusionRing, i: usize, j: usize) -> String {
    format!("({}, {})", ring.label(i), ring.label(j))
}

/// First pair of labels identified by one labeling and separated by the
/// other.
fn separating_pair(a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
    let n = a.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| (a[i] == a[j]) != (b[i] == b[j]))
}

fn label_set(ring: &FusionRing, set: &BTreeSet<usize>) -> String {
    let names: Vec<&str> = set.iter().map(|&i| ring.label(i)).collect();
    format!("{{{}}}", names.join(", "))
}

/// Equal fibers of the chain projection and the restriction map, a
/// bijective class map onto the center dual, additivity against the class
/// product, and equal invariant factors.
pub fn verify_chain_center_isomorphism(a: &GroupAnalysis) -> StatementResult {
    let id = StatementId::ChainCenterIsomorphism;
    let ring = &a.ring.ring;
    let p = &a.ring.presentation;
    let r = &a.restriction;
    let detail = format!(
        "C = {:?}, Z = {:?}",
        p.invariant_factors(),
        a.center.invariant_factors()
    );
    let partition = match &a.ring.partition {
        Ok(part) => part,
        Err(e) => {
            return StatementResult::new(id, Outcome::fail(format!("class partition: {e}")), detail)
        }
    };
    if let Some((i, j)) = separating_pair(&p.fibers(), &r.fibers()) {
        return StatementResult::new(
            id,
            Outcome::fail(format!(
                "labels {} separate the two kernels",
                label_pair(ring, i, j)
            )),
            detail,
        );
    }
    let mut image: Vec<Option<&CentralCharacter>> = vec![None; partition.class_count()];
    for (l, chi) in r.images.iter().enumerate() {
        let c = partition.class_of(l);
        match image[c] {
            Some(prev) if prev != chi => {
                return StatementResult::new(
                    id,
                    Outcome::fail(format!("class {c} maps to two central characters")),
                    detail,
                )
            }
            _ => image[c] = Some(chi),
        }
    }
    let image: Vec<&CentralCharacter> = image
        .into_iter()
        .map(|c| c.expect("classes are nonempty"))
        .collect();
    let distinct: BTreeSet<&CentralCharacter> = image.iter().copied().collect();
    if distinct.len() != image.len() || distinct.len() as u64 != a.center.order() {
        return StatementResult::new(
            id,
            Outcome::fail(format!(
                "class map hits {} of {} characters from {} classes",
                distinct.len(),
                a.center.order(),
                image.len()
            )),
            detail,
        );
    }
    for x in 0..image.len() {
        for y in 0..image.len() {
            if *image[partition.product(x, y)] != image[x].add(image[y], &r.factors) {
                return StatementResult::new(
                    id,
                    Outcome::fail(format!("class map is not additive on classes {x}, {y}")),
                    detail,
                );
            }
        }
    }
    if p.free_rank() != 0 || p.invariant_factors() != a.center.invariant_factors() {
        return StatementResult::new(id, Outcome::fail("invariant factors differ"), detail);
    }
    StatementResult::new(id, Outcome::Pass, detail)
}

/// The two chain-group constructions give identical invariant factors and
/// identical label fibers.
pub fn verify_chain_definitions_agree(a: &RingAnalysis) -> StatementResult {
    let id = StatementId::ChainDefinitionsAgree;
    let p = &a.presentation;
    match &a.partition {
        Err(e) => StatementResult::new(id, Outcome::fail(format!("class partition: {e}")), ""),
        Ok(part) => {
            let classes = class_group_structure(part);
            let detail = format!("snf {:?}, classes {:?}", p.invariant_factors(), classes);
            if compare_chain_groups(p, part) {
                StatementResult::new(id, Outcome::Pass, detail)
            } else {
                let witness = match separating_pair(&p.fibers(), part.class_map()) {
                    Some((i, j)) => {
                        format!("labels {} separate the fibers", label_pair(&a.ring, i, j))
                    }
                    None => String::from("invariant factors differ"),
                };
                StatementResult::new(id, Outcome::fail(witness), detail)
            }
        }
    }
}

/// Labels generated, under fusion and duals, by the constituents of
/// `X ⊗ X̄` for all `X`. Sorted.
pub fn compute_c0(ring: &FusionRing) -> Vec<usize> {
    let n = ring.rank();
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    let push = |k: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
        if !inside[k] {
            inside[k] = true;
            members.push(k);
        }
    };
    for i in 0..n {
        for &(k, _) in ring.product(i, ring.dual(i)) {
            push(k, &mut inside, &mut members);
        }
    }
    let mut done = 0;
    while done < members.len() {
        let a = members[done];
        done += 1;
        push(ring.dual(a), &mut inside, &mut members);
        for b in 0..done {
            let b = members[b];
            for (x, y) in [(a, b), (b, a)] {
                for &(k, _) in ring.product(x, y) {
                    push(k, &mut inside, &mut members);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

pub fn verify_c0_is_center_trivial(a: &GroupAnalysis) -> StatementResult {
    let ring = &a.ring.ring;
    let c0: BTreeSet<usize> = compute_c0(ring).into_iter().collect();
    let trivial: BTreeSet<usize> = (0..ring.rank())
        .filter(|&i| a.restriction.images[i].is_trivial())
        .collect();
    compare_sets(
        StatementId::C0IsCenterTrivial,
        ring,
        "C0",
        &c0,
        "center-trivial",
        &trivial,
    )
}

pub fn verify_projection_kernel(a: &RingAnalysis) -> StatementResult {
    let ring = &a.ring;
    let c0: BTreeSet<usize> = compute_c0(ring).into_iter().collect();
    let zero = a.presentation.zero();
    let kernel: BTreeSet<usize> = (0..ring.rank())
        .filter(|&i| a.presentation.projection(i) == zero.as_slice())
        .collect();
    compare_sets(
        StatementId::ProjectionKernelIsC0,
        ring,
        "kernel",
        &kernel,
        "C0",
        &c0,
    )
}

fn compare_sets(
    id: StatementId,
    ring: &FusionRing,
    left_name: &str,
    left: &BTreeSet<usize>,
    right_name: &str,
    right: &BTreeSet<usize>,
) -> StatementResult {
    let detail = format!(
        "|{left_name}| = {}, |{right_name}| = {}",
        left.len(),
        right.len()
    );
    if left == right {
        StatementResult::new(id, Outcome::Pass, detail)
    } else {
        let diff: BTreeSet<usize> = left.symmetric_difference(right).copied().collect();
        StatementResult::new(
            id,
            Outcome::fail(format!("sets differ on {}", label_set(ring, &diff))),
            detail,
        )
    }
}

/// A map from labels into `⊕ ℤ/factors[t] ⊕ ℤ^free`, one coordinate vector
/// per label. Coordinates past `factors.len()` are free.
#[derive(Clone, Copy, Debug)]
pub struct LabelMap<'a> {
    pub images: &'a [Vec<i64>],
    pub factors: &'a [u64],
}

impl LabelMap<'_> {
    fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        for (x, &f) in v.iter_mut().zip(self.factors) {
            *x = x.rem_euclid(f as i64);
        }
        v
    }

    fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &[i64]) -> Vec<i64> {
        self.reduce(a.iter().map(|x| -x).collect())
    }
}

/// `φ` is a t-map, `φ(unit) = 0` and `φ(dual(i)) = -φ(i)`.
pub fn verify_tmap_basics(
    id: StatementId,
    ring: &FusionRing,
    phi: LabelMap<'_>,
) -> StatementResult {
    let detail = format!("{} labels", ring.rank());
    for (i, j, k) in ring.triples() {
        if phi.add(&phi.images[i], &phi.images[j]) != phi.reduce(phi.images[k].clone()) {
            return StatementResult::new(
                id,
                Outcome::fail(format!(
                    "not a t-map on {} -> {}",
                    label_pair(ring, i, j),
                    ring.label(k)
                )),
                detail,
            );
        }
    }
    if phi
        .reduce(phi.images[ring.unit()].clone())
        .iter()
        .any(|&x| x != 0)
    {
        return StatementResult::new(id, Outcome::fail("unit does not map to 0"), detail);
    }
    for i in 0..ring.rank() {
        if phi.reduce(phi.images[ring.dual(i)].clone()) != phi.neg(&phi.images[i]) {
            return StatementResult::new(
                id,
                Outcome::fail(format!(
                    "dual of {} does not map to the negative",
                    ring.label(i)
                )),
                detail,
            );
        }
    }
    StatementResult::new(id, Outcome::Pass, detail)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `Π gcd(f_t, m)` (times `m` per free coordinate).
pub fn hom_count(factors: &[u64], free_rank: usize, m: u64) -> u64 {
    factors.iter().map(|&f| gcd(f, m)).product::<u64>() * m.pow(free_rank as u32)
}

/// `φ(k) = φ(i) + φ(j)` mod `m` for every fusion triple.
pub fn is_tmap_mod(ring: &FusionRing, phi: &[u64], m: u64) -> bool {
    ring.triples()
        .all(|(i, j, k)| (phi[i] + phi[j]) % m == phi[k])
}

/// All t-maps into `ℤ/m`, as label ↦ residue, in lexicographic order of
/// their homomorphism coordinates.
///
/// Each is a homomorphism out of the presented chain group composed with
/// the projection, and each is re-checked against the raw fusion triples;
/// panics if one fails that check.
pub fn enumerate_tmaps(
    ring: &FusionRing,
    presentation: &ChainGroupPresentation,
    m: u64,
) -> Vec<Vec<u64>> {
    // admissible values for each coordinate: h with f·h ≡ 0 (mod m)
    let mut choices: Vec<Vec<u64>> = presentation
        .invariant_factors()
        .iter()
        .map(|&f| {
            let step = m / gcd(f, m);
            (0..m).step_by(step as usize).collect()
        })
        .collect();
    choices.extend((0..presentation.free_rank()).map(|_| (0..m).collect()));

    let mut out = Vec::new();
    let mut h = vec![0u64; choices.len()];
    let mut pos = vec![0usize; choices.len()];
    loop {
        for (t, c) in choices.iter().enumerate() {
            h[t] = c[pos[t]];
        }
        let phi: Vec<u64> = (0..ring.rank())
            .map(|i| {
                let s: i128 = presentation
                    .projection(i)
                    .iter()
                    .zip(&h)
                    .map(|(&x, &y)| x as i128 * y as i128)
                    .sum();
                s.rem_euclid(m as i128) as u64
            })
            .collect();
        assert!(
            is_tmap_mod(ring, &phi, m),
            "homomorphism out of the chain group is not a t-map"
        );
        out.push(phi);

        let mut t = choices.len();
        loop {
            if t == 0 {
                return out;
            }
            t -= 1;
            pos[t] += 1;
            if pos[t] < choices[t].len() {
                break;
            }
            pos[t] = 0;
        }
    }
}

/// All t-maps into `ℤ/m` found by backtracking over label values with
/// constraint propagation; independent of any presentation. Sorted.
pub fn search_tmaps(ring: &FusionRing, m: u64) -> Vec<Vec<u64>> {
    let n = ring.rank();
    let triples: Vec<(usize, usize, usize)> = ring.triples().collect();
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, &(i, j, k)) in triples.iter().enumerate() {
        touching[i].push(t);
        if j != i {
            touching[j].push(t);
        }
        if k != i && k != j {
            touching[k].push(t);
        }
    }

    struct Search<'a> {
        m: u64,
        triples: &'a [(usize, usize, usize)],
        touching: &'a [Vec<usize>],
        found: Vec<Vec<u64>>,
    }

    impl Search<'_> {
        /// Assigns `label = value` and everything it forces; `false` on conflict.
        fn propagate(&self, phi: &mut [Option<u64>], label: usize, value: u64) -> bool {
            let m = self.m;
            let mut stack = vec![(label, value)];
            while let Some((l, v)) = stack.pop() {
                match phi[l] {
                    Some(old) if old != v => return false,
                    Some(_) => continue,
                    None => phi[l] = Some(v),
                }
                for &t in &self.touching[l] {
                    let (i, j, k) = self.triples[t];
                    match (phi[i], phi[j], phi[k]) {
                        (Some(a), Some(b), Some(c)) => {
                            if (a + b) % m != c {
                                return false;
                            }
                        }
                        (Some(a), Some(b), None) => stack.push((k, (a + b) % m)),
                        (Some(a), None, Some(c)) => stack.push((j, (c + m - a) % m)),
                        (None, Some(b), Some(c)) => stack.push((i, (c + m - b) % m)),
                        _ => {}
                    }
                }
            }
            true
        }

        fn run(&mut self, phi: Vec<Option<u64>>) {
            let Some(free) = phi.iter().position(Option::is_none) else {
                self.found
                    .push(phi.into_iter().map(|v| v.unwrap()).collect());
                return;
            };
            for v in 0..self.m {
                let mut next = phi.clone();
                if self.propagate(&mut next, free, v) {
                    self.run(next);
                }
            }
        }
    }

    let mut search = Search {
        m,
        triples: &triples,
        touching: &touching,
        found: Vec::new(),
    };
    search.run(vec![None; n]);
    let mut found = search.found;
    found.sort();
    found
}

/// For each modulus: the enumerated t-maps number `Π gcd(f_t, m)`, pass the
/// raw check, and coincide with those found by independent search.
pub fn verify_tmap_enumeration(a: &RingAnalysis, moduli: &[u64]) -> StatementResult {
    let id = StatementId::TmapEnumeration;
    let p = &a.presentation;
    let mut counts = Vec::new();
    for &m in moduli {
        let mut maps = enumerate_tmaps(&a.ring, p, m);
        let expected = hom_count(p.invariant_factors(), p.free_rank(), m);
        counts.push(format!("{m}:{}", maps.len()));
        if maps.len() as u64 != expected {
            return StatementResult::new(
                id,
                Outcome::fail(format!(
                    "m = {m}: {} t-maps, expected {expected}",
                    maps.len()
                )),
                counts.join(" "),
            );
        }
        maps.sort();
        maps.dedup();
        if maps.len() as u64 != expected {
            return StatementResult::new(
                id,
                Outcome::fail(format!("m = {m}: duplicate t-maps")),
                counts.join(" "),
            );
        }
        if maps != search_tmaps(&a.ring, m) {
            return StatementResult::new(
                id,
                Outcome::fail(format!("m = {m}: independent search finds a different set")),
                counts.join(" "),
            );
        }
    }
    StatementResult::new(id, Outcome::Pass, counts.join(" "))
}

/// Every t-map into `ℤ/m` equals `β ∘ r` for a homomorphism `β` on the
/// center dual, and the number of t-maps equals `|Hom(Ẑ, ℤ/m)|`.
pub fn verify_factorization(a: &GroupAnalysis, moduli: &[u64]) -> StatementResult {
    let id = StatementId::FactorsThroughCenterDual;
    let ring = &a.ring.ring;
    let r = &a.restriction;
    if !r.is_surjective {
        return StatementResult::new(
            id,
            Outcome::NotApplicable {
                reason: String::from("restriction map is not surjective"),
            },
            "",
        );
    }
    let dual = dual_group(&a.center);
    let mut counts = Vec::new();
    for &m in moduli {
        let maps = enumerate_tmaps(ring, &a.ring.presentation, m);
        counts.push(format!("{m}:{}", maps.len()));
        let expected = hom_count(&r.factors, 0, m);
        if maps.len() as u64 != expected {
            return StatementResult::new(
                id,
                Outcome::fail(format!(
                    "m = {m}: {} t-maps but {expected} homomorphisms from the center dual",
                    maps.len()
                )),
                counts.join(" "),
            );
        }
        for (n, phi) in maps.iter().enumerate() {
            let mut beta: HashMap<&CentralCharacter, u64> = HashMap::new();
            for (i, chi) in r.images.iter().enumerate() {
                if *beta.entry(chi).or_insert(phi[i]) != phi[i] {
                    return StatementResult::new(
                        id,
                        Outcome::fail(format!(
                            "m = {m}, map {n}: not constant on the fiber of {}",
                            ring.label(i)
                        )),
                        counts.join(" "),
                    );
                }
            }
            for x in &dual.characters {
                for y in &dual.characters {
                    if (beta[x] + beta[y]) % m != beta[&dual.add(x, y)] {
                        return StatementResult::new(
                            id,
                            Outcome::fail(format!(
                                "m = {m}, map {n}: induced map is not a homomorphism"
                            )),
                            counts.join(" "),
                        );
                    }
                }
            }
            if (0..ring.rank()).any(|i| beta[&r.images[i]] != phi[i]) {
                return StatementResult::new(
                    id,
                    Outcome::fail(format!("m = {m}, map {n}: composite differs")),
                    counts.join(" "),
                );
            }
        }
    }
    StatementResult::new(id, Outcome::Pass, counts.join(" "))
}

fn to_i64(v: &[u64]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn not_applicable(id: StatementId) -> StatementResult {
    StatementResult::new(
        id,
        Outcome::NotApplicable {
            reason: String::from("input is not a group"),
        },
        "",
    )
}

/// Checks that need only a fusion ring; center statements are marked not
/// applicable.
pub fn verify_ring(
    subject: impl Into<String>,
    a: &RingAnalysis,
    moduli: &[u64],
) -> VerificationReport {
    let p = &a.presentation;
    let mut results = vec![
        not_applicable(StatementId::ChainCenterIsomorphism),
        verify_chain_definitions_agree(a),
        not_applicable(StatementId::C0IsCenterTrivial),
        verify_projection_kernel(a),
        verify_tmap_basics(
            StatementId::ProjectionTmapBasics,
            &a.ring,
            LabelMap {
                images: p.projections(),
                factors: p.invariant_factors(),
            },
        ),
        not_applicable(StatementId::RestrictionTmapBasics),
        verify_tmap_enumeration(a, moduli),
        not_applicable(StatementId::FactorsThroughCenterDual),
    ];
    results.sort_by_key(|r| r.id);
    VerificationReport {
        subject: subject.into(),
        results,
    }
}

/// Every statement, on a group.
pub fn verify_group(
    subject: impl Into<String>,
    a: &GroupAnalysis,
    moduli: &[u64],
) -> VerificationReport {
    let mut report = verify_ring(subject, &a.ring, moduli);
    let r_images: Vec<Vec<i64>> = a
        .restriction
        .images
        .iter()
        .map(|c| to_i64(&c.exponents))
        .collect();
    let group_results = [
        verify_chain_center_isomorphism(a),
        verify_c0_is_center_trivial(a),
        verify_tmap_basics(
            StatementId::RestrictionTmapBasics,
            &a.ring.ring,
            LabelMap {
                images: &r_images,
                factors: &a.restriction.factors,
            },
        ),
        verify_factorization(a, moduli),
    ];
    for res in group_results {
        let slot = report
            .results
            .iter_mut()
            .find(|r| r.id == res.id)
            .expect("every id has a slot");
        *slot = res;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{cyclic_group_ring, ising_ring};
    use crate::groups::{make_named_group, DEFAULT_ORDER_BOUND};

    fn analyze(name: &str, params: &[i64]) -> GroupAnalysis {
        GroupAnalysis::new(make_named_group(name, params, DEFAULT_ORDER_BOUND).unwrap()).unwrap()
    }

    fn moduli() -> Vec<u64> {
        DEFAULT_MODULI.collect()
    }

    #[test]
    fn small_groups_pass_everything() {
        for (name, params) in [
            ("symmetric", &[3][..]),
            ("dicyclic", &[2]),
            ("cyclic", &[6]),
            ("dihedral", &[4]),
            ("klein4", &[]),
        ] {
            let a = analyze(name, params);
            let report = verify_group(name, &a, &moduli());
            for r in &report.results {
                assert_eq!(r.outcome, Outcome::Pass, "{name}: {} {}", r.id, r.detail);
            }
        }
    }

    #[test]
    fn c0_examples() {
        let q8 = analyze("dicyclic", &[2]);
        let linear: Vec<usize> = (0..5).filter(|&i| q8.table.degrees()[i] == 1).collect();
        assert_eq!(compute_c0(&q8.ring.ring), linear);
        let s3 = analyze("symmetric", &[3]);
        assert_eq!(compute_c0(&s3.ring.ring), vec![0, 1, 2]);
        assert_eq!(compute_c0(&cyclic_group_ring(5)), vec![0]);
    }

    #[test]
    fn tmap_counts() {
        let q8 = analyze("dicyclic", &[2]);
        assert_eq!(
            enumerate_tmaps(&q8.ring.ring, &q8.ring.presentation, 2).len(),
            2
        );
        assert_eq!(
            enumerate_tmaps(&q8.ring.ring, &q8.ring.presentation, 4).len(),
            2
        );
        let s3 = analyze("symmetric", &[3]);
        for m in 1..8 {
            assert_eq!(
                enumerate_tmaps(&s3.ring.ring, &s3.ring.presentation, m),
                vec![vec![0; 3]]
            );
        }
        let z5 = RingAnalysis::new(cyclic_group_ring(5));
        assert_eq!(enumerate_tmaps(&z5.ring, &z5.presentation, 6).len(), 1);
        assert_eq!(enumerate_tmaps(&z5.ring, &z5.presentation, 1).len(), 1);
    }

    #[test]
    fn search_agrees_with_enumeration() {
        let ring = ising_ring();
        let a = RingAnalysis::new(ring);
        for m in 1..=6 {
            let mut e = enumerate_tmaps(&a.ring, &a.presentation, m);
            e.sort();
            assert_eq!(e, search_tmaps(&a.ring, m));
        }
    }

    #[test]
    fn constant_map_is_a_tmap() {
        let a = analyze("alternating", &[4]);
        let zeros = vec![vec![0i64]; a.ring.ring.rank()];
        let r = verify_tmap_basics(
            StatementId::ProjectionTmapBasics,
            &a.ring.ring,
            LabelMap {
                images: &zeros,
                factors: &[5],
            },
        );
        assert_eq!(r.outcome, Outcome::Pass);
    }

    #[test]
    fn ring_input_skips_center_statements() {
        let report = verify_ring("ising", &RingAnalysis::new(ising_ring()), &moduli());
        assert!(report.passed());
        let na = report
            .results
            .iter()
            .filter(|r| matches!(r.outcome, Outcome::NotApplicable { .. }))
            .count();
        assert_eq!(na, 4);
        assert_eq!(
            report.results.iter().map(|r| r.id).collect::<Vec<_>>(),
            StatementId::ALL.to_vec()
        );
    }

    #[test]
    fn corrupted_restriction_is_caught() {
        let mut a = analyze("dicyclic", &[2]);
        // send a linear irrep to the nontrivial central character
        let lin = (1..5).find(|&i| a.table.degrees()[i] == 1).unwrap();
        a.restriction.images[lin] = CentralCharacter { exponents: vec![1] };
        let r = verify_chain_center_isomorphism(&a);
        assert!(r.outcome.is_fail());
        assert!(verify_c0_is_center_trivial(&a).outcome.is_fail());
    }

    #[test]
    fn statement_ids_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(StatementId::parse(id.as_str()), Some(id));
        }
    }
}
