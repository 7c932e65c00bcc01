//! The chain group of a fusion ring, computed two independent ways.
//!
//! [`chain_group_snf`] presents it as the cokernel of the relation matrix
//! `x_i + x_j - x_k` (one row per `N_ij^k > 0`) and reads the structure off a
//! Smith normal form. [`chain_classes_union_find`] instead merges labels with a
//! union-find until the product of classes is well defined.
//! [`compare_chain_groups`] checks that both give the same group and the same
//! label fibers.

mod lattice;
mod snf;
mod truncation;
mod unionfind;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::fusion::FusionRing;

pub use lattice::{basis_index, lattice_basis};
pub use snf::{smith_normal_form, IntMatrix, SmithDecomposition};
pub use truncation::{
    level_is_stable, truncated_chain_group, truncation_level, TruncationLevel, TruncationReport,
};
pub use unionfind::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainGroupError {
    #[error(
        "class product not well defined: {left} and {right} lie in one class but {left}⊗{with} and {right}⊗{with} do not"
    )]
    WellDefinedness {
        left: String,
        right: String,
        with: String,
    },
    #[error("class product is not commutative on classes {a} and {b}")]
    NonCommutative { a: usize, b: usize },
    #[error("class of {label} times class of its dual is not the identity")]
    InverseMismatch { label: String },
}

/// A sparse relation row: `(column, coefficient)` sorted by column, no zeros.
pub type Relation = Vec<(usize, i64)>;

/// `x_i + x_j - x_k` in canonical sparse form; `None` if it is trivial.
pub fn relation_row(i: usize, j: usize, k: usize) -> Option<Relation> {
    let mut row: Relation = vec![(i, 1), (j, 1), (k, -1)];
    row.sort_unstable();
    let mut out: Relation = Vec::with_capacity(3);
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    (!out.is_empty()).then_some(out)
}

/// The chain group as `⊕ ℤ/f_t ⊕ ℤ^free_rank` together with the image of
/// every label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGroupPresentation {
    labels: Vec<String>,
    unit: usize,
    relations: Vec<Relation>,
    invariant_factors: Vec<u64>,
    free_rank: usize,
    projection: Vec<Vec<i64>>,
    smith: SmithDecomposition,
}

impl ChainGroupPresentation {
    /// Cokernel of the given relations on `labels`. Duplicate rows are
    /// removed first.
    ///
    /// Panics if an invariant factor exceeds `u64` or a free coordinate
    /// exceeds `i64`.
    pub fn from_relations(labels: Vec<String>, unit: usize, mut relations: Vec<Relation>) -> Self {
        let n = labels.len();
        relations.sort_unstable();
        relations.dedup();
        let basis = lattice_basis(n, &relations);
        let mut matrix = IntMatrix::zeros(basis.len(), n);
        for (i, row) in basis.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                matrix.set(i, j, x);
            }
        }
        let smith = smith_normal_form(&matrix);
        let mut diag = smith.diagonal();
        diag.resize(n, BigInt::zero());

        let mut invariant_factors = Vec::new();
        let mut torsion_cols = Vec::new();
        let mut free_cols = Vec::new();
        for (t, d) in diag.iter().enumerate() {
            if d.is_zero() {
                free_cols.push(t);
            } else if !d.is_one() {
                invariant_factors.push(d.to_u64().expect("invariant factor exceeds u64"));
                torsion_cols.push(t);
            }
        }
        let projection = (0..n)
            .map(|i| {
                let torsion = torsion_cols.iter().map(|&t| {
                    smith
                        .v
                        .get(i, t)
                        .mod_floor(&diag[t])
                        .to_i64()
                        .expect("reduced coordinate fits")
                });
                let free = free_cols.iter().map(|&t| {
                    smith
                        .v
                        .get(i, t)
                        .to_i64()
                        .expect("free coordinate exceeds i64")
                });
                torsion.chain(free).collect()
            })
            .collect();
        Self {
            labels,
            unit,
            relations,
            invariant_factors,
            free_rank: free_cols.len(),
            projection,
            smith,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// Deduplicated relation rows.
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The deduplicated relations as a dense matrix.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relations.len(), self.labels.len());
        for (r, row) in self.relations.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, BigInt::from(v));
            }
        }
        m
    }

    /// Invariant factors `f_1 | f_2 | …`, each greater than 1.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Group order, or `None` if the free rank is positive.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.invariant_factors.iter().product())
    }

    /// Smith decomposition of the reduced relation lattice basis.
    pub fn smith(&self) -> &SmithDecomposition {
        &self.smith
    }

    /// Image of label `i`: torsion coordinates in `[0, f_t)`, then free ones.
    pub fn projection(&self, i: usize) -> &[i64] {
        &self.projection[i]
    }

    pub fn projections(&self) -> &[Vec<i64>] {
        &self.projection
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.invariant_factors.len() + self.free_rank]
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, &f) in v.iter_mut().zip(&self.invariant_factors) {
            *x = x.rem_euclid(f as i64);
        }
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&mut out);
        out
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = a.iter().map(|x| -x).collect();
        self.reduce(&mut out);
        out
    }

    /// Label fibers of the projection, numbered by first occurrence.
    pub fn fibers(&self) -> Vec<usize> {
        let mut ids: HashMap<&[i64], usize> = HashMap::new();
        self.projection
            .iter()
            .map(|v| {
                let next = ids.len();
                *ids.entry(v.as_slice()).or_insert(next)
            })
            .collect()
    }

    /// `projection(k) = projection(i) + projection(j)` for every relation.
    pub fn respects_relations(&self) -> bool {
        self.relations.iter().all(|row| {
            let mut acc = self.zero();
            for &(c, v) in row {
                for (a, x) in acc.iter_mut().zip(&self.projection[c]) {
                    *a += v * x;
                }
            }
            self.reduce(&mut acc);
            acc.iter().all(|&x| x == 0)
        })
    }
}

/// The chain group of a fusion ring via Smith normal form.
pub fn chain_group_snf(ring: &FusionRing) -> ChainGroupPresentation {
    let relations = ring
        .triples()
        .filter_map(|(i, j, k)| relation_row(i, j, k))
        .collect();
    ChainGroupPresentation::from_relations(ring.labels().to_vec(), ring.unit(), relations)
}

/// Labels grouped into chain classes, with the induced group law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainClassPartition {
    class_of: Vec<usize>,
    class_count: usize,
    product_table: Vec<Vec<usize>>,
    inverse_of: Vec<usize>,
}

impl ChainClassPartition {
    /// Class ids numbered by first occurrence, so the unit's class is the
    /// unit label's position among first occurrences.
    pub fn class_of(&self, label: usize) -> usize {
        self.class_of[label]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.product_table[a][b]
    }

    pub fn product_table(&self) -> &[Vec<usize>] {
        &self.product_table
    }

    pub fn inverse_of(&self, class: usize) -> usize {
        self.inverse_of[class]
    }

    pub fn members(&self, class: usize) -> Vec<usize> {
        (0..self.class_of.len())
            .filter(|&l| self.class_of[l] == class)
            .collect()
    }

    /// Same partition with class ids permuted by `perm` (for testing
    /// comparisons).
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let mut table = vec![vec![0; self.class_count]; self.class_count];
        let mut inverse = vec![0; self.class_count];
        for a in 0..self.class_count {
            for b in 0..self.class_count {
                table[perm[a]][perm[b]] = perm[self.product_table[a][b]];
            }
            inverse[perm[a]] = perm[self.inverse_of[a]];
        }
        Self {
            class_of: self.class_of.iter().map(|&c| perm[c]).collect(),
            class_count: self.class_count,
            product_table: table,
            inverse_of: inverse,
        }
    }
}

/// Chain classes by union-find: all outputs of each `i ⊗ j` are merged, then
/// the partition is closed under the product congruence. The class product
/// is checked against every pair of labels, for commutativity, and against
/// duals.
pub fn chain_classes_union_find(ring: &FusionRing) -> Result<ChainClassPartition, ChainGroupError> {
    let n = ring.rank();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in 0..n {
            if let Some((&(first, _), rest)) = ring.product(i, j).split_first() {
                for &(k, _) in rest {
                    uf.union(first, k);
                }
            }
        }
    }
    let first_output = |i: usize, j: usize| ring.product(i, j).first().map(|&(k, _)| k);
    loop {
        let mut changed = false;
        let roots: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        for a in 0..n {
            let r = roots[a];
            if r == a {
                continue;
            }
            for b in 0..n {
                for (x, y) in [
                    (first_output(a, b), first_output(r, b)),
                    (first_output(b, a), first_output(b, r)),
                ] {
                    if let (Some(x), Some(y)) = (x, y) {
                        changed |= uf.union(x, y);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let class_of = uf.labeling();
    let class_count = uf.set_count();
    let mut rep = vec![usize::MAX; class_count];
    for (l, &c) in class_of.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = l;
        }
    }
    let mut product_table = vec![vec![0; class_count]; class_count];
    for a in 0..class_count {
        for b in 0..class_count {
            let k = first_output(rep[a], rep[b]).expect("fusion products are nonempty");
            product_table[a][b] = class_of[k];
        }
    }
    for a in 0..n {
        for b in 0..n {
            let expected = product_table[class_of[a]][class_of[b]];
            if ring
                .product(a, b)
                .iter()
                .any(|&(k, _)| class_of[k] != expected)
            {
                let other = rep[class_of[a]];
                return Err(ChainGroupError::WellDefinedness {
                    left: ring.label(other).into(),
                    right: ring.label(a).into(),
                    with: ring.label(b).into(),
                });
            }
        }
    }
    for a in 0..class_count {
        for b in a + 1..class_count {
            if product_table[a][b] != product_table[b][a] {
                return Err(ChainGroupError::NonCommutative { a, b });
            }
        }
    }
    let identity = class_of[ring.unit()];
    let inverse_of: Vec<usize> = rep.iter().map(|&r| class_of[ring.dual(r)]).collect();
    for (a, &inv) in inverse_of.iter().enumerate() {
        if product_table[a][inv] != identity {
            return Err(ChainGroupError::InverseMismatch {
                label: ring.label(rep[a]).into(),
            });
        }
    }
    Ok(ChainClassPartition {
        class_of,
        class_count,
        product_table,
        inverse_of,
    })
}

/// Invariant factors of the group given by a class product table.
pub fn class_group_structure(partition: &ChainClassPartition) -> Vec<u64> {
    let n = partition.class_count;
    let labels = (0..n).map(|c| alloc::format!("{c}")).collect();
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| partition.product_table[e][a] == a))
        .unwrap_or(0);
    let relations = (0..n)
        .flat_map(|a| (0..n).filter_map(move |b| relation_row(a, b, partition.product_table[a][b])))
        .collect();
    ChainGroupPresentation::from_relations(labels, identity, relations)
        .invariant_factors
        .clone()
}

/// `true` iff the presentation is finite with the same invariant factors as
/// the class group and its label fibers are exactly the classes.
pub fn compare_chain_groups(
    presentation: &ChainGroupPresentation,
    partition: &ChainClassPartition,
) -> bool {
    presentation.free_rank == 0
        && presentation.invariant_factors == class_group_structure(partition)
        && presentation.fibers() == partition.class_of
}

#[cfg(test)]
mod tests;
