//! Chain groups of finite windows of a lazily presented fusion rule.
//!
//! At level `ℓ` the generators are the oracle's window labels and a relation
//! `x_a + x_b - x_c` is admitted only if `a`, `b` and `c` all lie in the
//! window. Every admitted relation holds in the full chain group, so each
//! level maps canonically onto it. Agreement between consecutive levels is
//! reported as stabilization; it is evidence, not proof.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{basis_index, lattice_basis, relation_row, ChainGroupPresentation, Relation};
use crate::fusion::FusionOracle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationLevel {
    pub level: usize,
    pub window: Vec<u64>,
    pub presentation: ChainGroupPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationReport {
    pub levels: Vec<TruncationLevel>,
    /// Whether the last two levels agree; `None` with fewer than two levels.
    pub stabilized: Option<bool>,
}

/// Presentation of the window at `level`.
///
/// Panics if the window does not contain the oracle's unit.
pub fn truncation_level<O: FusionOracle + ?Sized>(oracle: &O, level: usize) -> TruncationLevel {
    let window = oracle.window(level);
    let index: HashMap<u64, usize> = window.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let unit = *index.get(&oracle.unit()).expect("window contains the unit");
    let mut relations: Vec<Relation> = Vec::new();
    for (i, &a) in window.iter().enumerate() {
        for (j, &b) in window.iter().enumerate() {
            for (c, _) in oracle.fuse(a, b) {
                if let Some(&k) = index.get(&c) {
                    relations.extend(relation_row(i, j, k));
                }
            }
        }
    }
    let labels: Vec<String> = window.iter().map(|&l| oracle.label_name(l)).collect();
    let presentation = ChainGroupPresentation::from_relations(labels, unit, relations);
    TruncationLevel {
        level,
        window,
        presentation,
    }
}

/// `next` is isomorphic to `prev` via the canonical map: same invariant
/// factors and free rank, and the images of `prev`'s labels generate `next`.
pub fn level_is_stable(prev: &TruncationLevel, next: &TruncationLevel) -> bool {
    let (p, q) = (&prev.presentation, &next.presentation);
    if p.invariant_factors() != q.invariant_factors() || p.free_rank() != q.free_rank() {
        return false;
    }
    let positions: HashMap<u64, usize> = next
        .window
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .collect();
    let dim = q.invariant_factors().len() + q.free_rank();
    let mut rows: Vec<Relation> = Vec::new();
    for l in &prev.window {
        let Some(&i) = positions.get(l) else {
            return false;
        };
        rows.push(
            q.projection(i)
                .iter()
                .copied()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .collect(),
        );
    }
    for (t, &f) in q.invariant_factors().iter().enumerate() {
        rows.push(alloc::vec![(t, f as i64)]);
    }
    dim == 0 || basis_index(&lattice_basis(dim, &rows)) == Some(1)
}

/// Presentations for levels `1..=max_level`.
pub fn truncated_chain_group<O: FusionOracle + ?Sized>(
    oracle: &O,
    max_level: usize,
) -> TruncationReport {
    let levels: Vec<TruncationLevel> = (1..=max_level)
        .map(|l| truncation_level(oracle, l))
        .collect();
    let stabilized = match levels.as_slice() {
        [.., prev, next] => Some(level_is_stable(prev, next)),
        _ => None,
    };
    TruncationReport { levels, stabilized }
}
