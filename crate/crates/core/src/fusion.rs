//! Fusion rings: simple labels, a unit, a duality involution, and
//! multiplicities `N[i][j][k]` of `k` in `i ⊗ j`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::charmod::ModularCharacterTable;

/// Rings up to this rank get the full associativity scan.
pub const FULL_SCAN_RANK: usize = 256;
const SAMPLED_TRIPLES: usize = 50_000;
const SAMPLE_SEED: u64 = 0xf0_5104;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("malformed fusion data: {0}")]
    Malformed(String),
    #[error("fusion axioms violated: {}", .0.summary())]
    Invalid(ValidationReport),
    #[error("multiplicity N[{i}][{j}][{k}] lifts to {value}, above the group order")]
    ResidueOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        value: u64,
    },
}

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `unit ⊗ j ≠ j` (`left = true`) or `j ⊗ unit ≠ j`.
    UnitLaw { label: usize, left: bool },
    /// `N[i][j][unit] ≠ δ(j, dual(i))`.
    Duality { i: usize, j: usize, found: u64 },
    /// `dual` is not an involution at `i`.
    DualInvolution { i: usize },
    /// `N[i][j][k] ≠ N[dual(k)][i][dual(j)]`.
    DualCompatibility { i: usize, j: usize, k: usize },
    /// `((i ⊗ j) ⊗ k)[l] ≠ (i ⊗ (j ⊗ k))[l]`.
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        left: u64,
        right: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnitLaw { label, left: true } => write!(f, "unit law: 1⊗{label} ≠ {label}"),
            Violation::UnitLaw { label, left: false } => write!(f, "unit law: {label}⊗1 ≠ {label}"),
            Violation::Duality { i, j, found } => write!(f, "duality: N[{i}][{j}][1] = {found}"),
            Violation::DualInvolution { i } => write!(f, "dual is not an involution at {i}"),
            Violation::DualCompatibility { i, j, k } => {
                write!(f, "dual compatibility: N[{i}][{j}][{k}] ≠ N[k̄][{i}][j̄]")
            }
            Violation::Associativity {
                i,
                j,
                k,
                l,
                left,
                right,
            } => {
                write!(f, "associativity at ({i},{j},{k}) → {l}: {left} ≠ {right}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// False when associativity was checked on a sample of triples only.
    pub exhaustive: bool,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        match self.violations.as_slice() {
            [] => "none".to_string(),
            [v] => v.to_string(),
            [v, rest @ ..] => format!("{v} (and {} more)", rest.len()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationOptions {
    pub dual_compatibility: bool,
    pub full_scan_rank: usize,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self {
            dual_compatibility: true,
            full_scan_rank: FULL_SCAN_RANK,
        }
    }
}

/// A based ring with nonnegative integer structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    /// `products[i * n + j]`: sorted `(k, N[i][j][k])` with positive multiplicity.
    products: Vec<Vec<(usize, u64)>>,
    dims: Option<Vec<u64>>,
    commutative: bool,
}

impl FusionRing {
    /// Builds a ring without checking the fusion axioms; only the shape is
    /// checked. Zero multiplicities are dropped and repeated `k` summed.
    pub fn from_raw(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        products: Vec<Vec<(usize, u64)>>,
        dims: Option<Vec<u64>>,
    ) -> Result<Self, FusionError> {
        let n = labels.len();
        if n == 0 {
            return Err(FusionError::Malformed(
                "at least one label is required".into(),
            ));
        }
        if unit >= n || dual.len() != n || dual.iter().any(|&d| d >= n) {
            return Err(FusionError::Malformed("unit or dual out of range".into()));
        }
        if products.len() != n * n {
            return Err(FusionError::Malformed(format!(
                "expected {} products, got {}",
                n * n,
                products.len()
            )));
        }
        if dims.as_ref().is_some_and(|d| d.len() != n) {
            return Err(FusionError::Malformed(
                "one dimension per label required".into(),
            ));
        }
        let mut seen = labels.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return Err(FusionError::Malformed("labels must be distinct".into()));
        }
        let mut normalized = Vec::with_capacity(n * n);
        for mut entry in products {
            if entry.iter().any(|&(k, _)| k >= n) {
                return Err(FusionError::Malformed(
                    "product refers to an unknown label".into(),
                ));
            }
            entry.sort_unstable();
            let mut merged: Vec<(usize, u64)> = Vec::with_capacity(entry.len());
            for (k, m) in entry {
                match merged.last_mut() {
                    Some((last, acc)) if *last == k => *acc += m,
                    _ => merged.push((k, m)),
                }
            }
            merged.retain(|&(_, m)| m > 0);
            normalized.push(merged);
        }
        let commutative =
            (0..n).all(|i| (0..n).all(|j| normalized[i * n + j] == normalized[j * n + i]));
        Ok(Self {
            labels,
            unit,
            dual,
            products: normalized,
            dims,
            commutative,
        })
    }

    /// [`from_raw`](Self::from_raw) followed by full validation.
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        products: Vec<Vec<(usize, u64)>>,
        dims: Option<Vec<u64>>,
    ) -> Result<Self, FusionError> {
        Self::from_raw(labels, unit, dual, products, dims)?.validated()
    }

    pub fn validated(self) -> Result<Self, FusionError> {
        let report = validate_fusion_ring(&self, ValidationOptions::default());
        if report.is_ok() {
            Ok(self)
        } else {
            Err(FusionError::Invalid(report))
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// Dimensions (degrees) of the labels, when known.
    pub fn dims(&self) -> Option<&[u64]> {
        self.dims.as_deref()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Sorted `(k, N[i][j][k])` with `N > 0`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.products[i * self.rank() + j]
    }

    pub fn multiplicity(&self, i: usize, j: usize, k: usize) -> u64 {
        self.product(i, j)
            .iter()
            .find(|&&(l, _)| l == k)
            .map_or(0, |&(_, m)| m)
    }

    /// All `(i, j, k)` with `N[i][j][k] > 0`, in lexicographic order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| {
            (0..n).flat_map(move |j| self.product(i, j).iter().map(move |&(k, _)| (i, j, k)))
        })
    }

    /// Labels whose product with their dual is the unit alone.
    pub fn invertible_labels(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.product(i, self.dual(i)) == [(self.unit, 1)])
            .collect()
    }
}

/// Checks unit laws, duality, dual compatibility (when enabled) and
/// associativity; every violation found is reported.
///
/// Associativity is scanned over all triples up to `full_scan_rank` and on
/// a seeded random sample of triples above it.
pub fn validate_fusion_ring(ring: &FusionRing, opts: ValidationOptions) -> ValidationReport {
    let n = ring.rank();
    let u = ring.unit;
    let mut violations = Vec::new();
    for j in 0..n {
        if ring.product(u, j) != [(j, 1)] {
            violations.push(Violation::UnitLaw {
                label: j,
                left: true,
            });
        }
        if ring.product(j, u) != [(j, 1)] {
            violations.push(Violation::UnitLaw {
                label: j,
                left: false,
            });
        }
    }
    for i in 0..n {
        if ring.dual(ring.dual(i)) != i {
            violations.push(Violation::DualInvolution { i });
        }
        for j in 0..n {
            let found = ring.multiplicity(i, j, u);
            if found != u64::from(j == ring.dual(i)) {
                violations.push(Violation::Duality { i, j, found });
            }
        }
    }
    if opts.dual_compatibility {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = ring.multiplicity(i, j, k);
                    let rhs = ring.multiplicity(ring.dual(k), i, ring.dual(j));
                    if lhs != rhs {
                        violations.push(Violation::DualCompatibility { i, j, k });
                    }
                }
            }
        }
    }
    let exhaustive = n <= opts.full_scan_rank;
    let mut left = vec![0u64; n];
    let mut right = vec![0u64; n];
    let mut check = |i: usize, j: usize, k: usize, violations: &mut Vec<Violation>| {
        for &(m, a) in ring.product(i, j) {
            for &(l, b) in ring.product(m, k) {
                left[l] += a * b;
            }
        }
        for &(m, a) in ring.product(j, k) {
            for &(l, b) in ring.product(i, m) {
                right[l] += a * b;
            }
        }
        for l in 0..n {
            if left[l] != right[l] {
                violations.push(Violation::Associativity {
                    i,
                    j,
                    k,
                    l,
                    left: left[l],
                    right: right[l],
                });
            }
            left[l] = 0;
            right[l] = 0;
        }
    };
    if exhaustive {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    check(i, j, k, &mut violations);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLED_TRIPLES {
            let mut pick = || (rng.next_u64() % n as u64) as usize;
            let (i, j, k) = (pick(), pick(), pick());
            check(i, j, k, &mut violations);
        }
    }
    ValidationReport {
        violations,
        exhaustive,
    }
}

/// Fusion rules of a finite group from its character table:
/// `N[i][j][k] = |G|⁻¹ Σ_c |C_c| χ_i(c) χ_j(c) χ_k(c̄)`, lifted from F_p.
///
/// Labels are `chi0, chi1, …` in table order; `chi0` is the trivial
/// representation and the degrees become the label dimensions.
pub fn fusion_from_character_table(
    table: &ModularCharacterTable,
) -> Result<FusionRing, FusionError> {
    let f = table.field();
    let p = f.modulus();
    let r = table.num_irreps();
    let order = table.group_order();
    let order_inv = f.inv(f.reduce(order));
    let sizes = table.class_sizes();
    let inv = table.inverse_class();
    let v = table.values();
    // weighted[k][c] = |C_c| χ_k(c̄)
    let weighted: Vec<Vec<u64>> = (0..r)
        .map(|k| {
            (0..r)
                .map(|c| f.mul(f.reduce(sizes[c]), v[k][inv[c]]))
                .collect()
        })
        .collect();
    let mut products = vec![Vec::new(); r * r];
    let mut pair = vec![0u64; r];
    for i in 0..r {
        for j in i..r {
            for c in 0..r {
                pair[c] = f.mul(v[i][c], v[j][c]);
            }
            let mut entry = Vec::new();
            for k in 0..r {
                let mut acc: u64 = 0;
                for c in 0..r {
                    acc = (acc + pair[c] * weighted[k][c]) % p;
                }
                let value = f.mul(acc, order_inv);
                if value > order {
                    return Err(FusionError::ResidueOutOfRange { i, j, k, value });
                }
                if value > 0 {
                    entry.push((k, value));
                }
            }
            products[j * r + i] = entry.clone();
            products[i * r + j] = entry;
        }
    }
    let mut dual = vec![usize::MAX; r];
    for i in 0..r {
        for k in 0..r {
            if products[i * r + k].first() == Some(&(0, 1)) {
                dual[i] = k;
                break;
            }
        }
        if dual[i] == usize::MAX {
            return Err(FusionError::Malformed(format!("irrep {i} has no dual")));
        }
    }
    let labels = (0..r).map(|i| format!("chi{i}")).collect();
    FusionRing::new(labels, 0, dual, products, Some(table.degrees().to_vec()))
}

/// A fusion rule on a possibly infinite label set, presented lazily.
///
/// Labels are nonnegative integers. [`window`](Self::window) gives the
/// finite set of labels admitted at a truncation level.
pub trait FusionOracle {
    fn unit(&self) -> u64;
    fn dual(&self, label: u64) -> u64;
    /// The decomposition of `a ⊗ b` as `(label, multiplicity)` pairs.
    fn fuse(&self, a: u64, b: u64) -> Vec<(u64, u64)>;
    /// Labels admitted at `level`, sorted ascending.
    fn window(&self, level: usize) -> Vec<u64>;
    fn label_name(&self, label: u64) -> String {
        label.to_string()
    }
}

/// Clebsch–Gordan rule of SU(2) on doubled spins `ℓ = 0, 1, 2, …`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Su2Oracle;

pub fn su2_fusion_oracle() -> Su2Oracle {
    Su2Oracle
}

impl FusionOracle for Su2Oracle {
    fn unit(&self) -> u64 {
        0
    }

    fn dual(&self, label: u64) -> u64 {
        label
    }

    fn fuse(&self, a: u64, b: u64) -> Vec<(u64, u64)> {
        (a.abs_diff(b)..=a + b).step_by(2).map(|l| (l, 1)).collect()
    }

    /// Doubled spins `0..=level`.
    fn window(&self, level: usize) -> Vec<u64> {
        (0..=level as u64).collect()
    }
}

/// The group ring of ℤ/n presented lazily. Finite, so every level admits
/// all labels.
#[derive(Clone, Copy, Debug)]
pub struct CyclicOracle {
    pub n: u64,
}

impl FusionOracle for CyclicOracle {
    fn unit(&self) -> u64 {
        0
    }

    fn dual(&self, label: u64) -> u64 {
        (self.n - label) % self.n
    }

    fn fuse(&self, a: u64, b: u64) -> Vec<(u64, u64)> {
        vec![((a + b) % self.n, 1)]
    }

    fn window(&self, _level: usize) -> Vec<u64> {
        (0..self.n).collect()
    }
}

/// Any finite fusion ring as an oracle; every level admits all labels.
#[derive(Clone, Copy, Debug)]
pub struct RingOracle<'a>(pub &'a FusionRing);

impl FusionOracle for RingOracle<'_> {
    fn unit(&self) -> u64 {
        self.0.unit() as u64
    }

    fn dual(&self, label: u64) -> u64 {
        self.0.dual(label as usize) as u64
    }

    fn fuse(&self, a: u64, b: u64) -> Vec<(u64, u64)> {
        self.0
            .product(a as usize, b as usize)
            .iter()
            .map(|&(k, m)| (k as u64, m))
            .collect()
    }

    fn window(&self, _level: usize) -> Vec<u64> {
        (0..self.0.rank() as u64).collect()
    }

    fn label_name(&self, label: u64) -> String {
        self.0.label(label as usize).to_string()
    }
}

/// The group ring of ℤ/n with labels `0, …, n-1`.
pub fn cyclic_group_ring(n: usize) -> FusionRing {
    let labels = (0..n).map(|i| i.to_string()).collect();
    let dual = (0..n).map(|i| (n - i) % n).collect();
    let products = (0..n * n)
        .map(|ij| vec![((ij / n + ij % n) % n, 1)])
        .collect();
    FusionRing::new(labels, 0, dual, products, Some(vec![1; n]))
        .expect("group rings satisfy the axioms")
}

/// The Ising fusion ring `{1, eps, sigma}`.
pub fn ising_ring() -> FusionRing {
    let labels = vec!["1".to_string(), "eps".to_string(), "sigma".to_string()];
    let products = vec![
        vec![(0, 1)],
        vec![(1, 1)],
        vec![(2, 1)],
        vec![(1, 1)],
        vec![(0, 1)],
        vec![(2, 1)],
        vec![(2, 1)],
        vec![(2, 1)],
        vec![(0, 1), (1, 1)],
    ];
    FusionRing::new(labels, 0, vec![0, 1, 2], products, None)
        .expect("the Ising ring satisfies the axioms")
}
