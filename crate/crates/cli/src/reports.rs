//! Serializable reports and their text rendering. JSON is the contract; the
//! text form is a summary for people.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use chaingroup_core::chaingroup::ChainGroupPresentation;
use chaingroup_core::verify::{Outcome, VerificationReport};
use serde::{Deserialize, Serialize};

/// Added to every verification report.
pub const FINITE_TARGET_NOTE: &str =
    "t-maps are enumerated into finite cyclic targets Z/m only; other abelian targets are not searched";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
    /// Label ↦ chain class, classes numbered by first occurrence.
    pub classes: BTreeMap<String, usize>,
    pub stabilized: Option<bool>,
}

impl PresentationReport {
    pub fn new(p: &ChainGroupPresentation, stabilized: Option<bool>) -> Self {
        let classes = p.labels().iter().cloned().zip(p.fibers()).collect();
        Self {
            invariant_factors: p.invariant_factors().to_vec(),
            free_rank: p.free_rank(),
            classes,
            stabilized,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.values().max().map_or(0, |&m| m + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub center_invariants: Vec<u64>,
    /// Element indices of the recorded center generators.
    pub generators: Vec<usize>,
    /// Irrep label ↦ central character exponents relative to `generators`.
    #[serde(rename = "r_G")]
    pub r_g: BTreeMap<String, Vec<u64>>,
    pub abelianization_dual: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeKind {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementReport {
    pub id: String,
    pub outcome: OutcomeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub subject: String,
    pub passed: bool,
    pub results: Vec<StatementReport>,
    pub note: String,
}

impl From<&VerificationReport> for VerificationJson {
    fn from(r: &VerificationReport) -> Self {
        let results = r
            .results
            .iter()
            .map(|s| {
                let (outcome, witness, reason) = match &s.outcome {
                    Outcome::Pass => (OutcomeKind::Pass, None, None),
                    Outcome::Fail { witness } => (OutcomeKind::Fail, Some(witness.clone()), None),
                    Outcome::NotApplicable { reason } => {
                        (OutcomeKind::NotApplicable, None, Some(reason.clone()))
                    }
                };
                StatementReport {
                    id: s.id.as_str().to_string(),
                    outcome,
                    witness,
                    reason,
                    detail: s.detail.clone(),
                }
            })
            .collect();
        Self {
            subject: r.subject.clone(),
            passed: r.passed(),
            results,
            note: FINITE_TARGET_NOTE.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubjectKind {
    Group,
    Fusion,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub subject: String,
    pub kind: SubjectKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub presentation: PresentationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<CenterReport>,
    /// Labels in the kernel of the chain projection.
    pub c0: Vec<String>,
    pub verification: VerificationJson,
    /// Stage ↦ milliseconds; present only on request, since it breaks
    /// byte-for-byte reproducibility.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRunEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub status: EntryStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_invariants: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
}

/// Side-by-side chain groups of `dihedral(4l)` and `dicyclic(2l)`, two
/// non-isomorphic groups of order `8l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairComparison {
    pub l: u64,
    pub dihedral: String,
    pub dicyclic: String,
    pub dihedral_factors: Vec<u64>,
    pub dicyclic_factors: Vec<u64>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRunReport {
    pub max_order: usize,
    pub passed: bool,
    pub entries: Vec<CatalogRunEntry>,
    pub pairs: Vec<PairComparison>,
}

impl CatalogRunReport {
    pub fn worst_status(&self) -> Option<EntryStatus> {
        let rank = |s: &EntryStatus| match s {
            EntryStatus::Pass => 0,
            EntryStatus::Fail => 1,
            EntryStatus::Error => 2,
        };
        self.entries
            .iter()
            .map(|e| e.status.clone())
            .max_by_key(rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub level: usize,
    pub window_size: usize,
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationJson {
    pub levels: Vec<LevelReport>,
    /// The last level's presentation, carrying the stabilization flag.
    pub presentation: PresentationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogListing {
    pub id: String,
    pub order: usize,
}

fn factors(f: &[u64], free: usize) -> String {
    let mut parts: Vec<String> = f.iter().map(|x| format!("Z/{x}")).collect();
    parts.extend(std::iter::repeat_n("Z".to_string(), free));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" x ")
    }
}

fn render_verification(out: &mut String, v: &VerificationJson) {
    for s in &v.results {
        let tag = match s.outcome {
            OutcomeKind::Pass => "pass",
            OutcomeKind::Fail => "FAIL",
            OutcomeKind::NotApplicable => "n/a ",
        };
        let _ = write!(out, "  [{tag}] {}", s.id);
        if let Some(w) = &s.witness {
            let _ = write!(out, ": {w}");
        } else if let Some(r) = &s.reason {
            let _ = write!(out, " ({r})");
        } else if !s.detail.is_empty() {
            let _ = write!(out, " ({})", s.detail);
        }
        out.push('\n');
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{}", self.subject);
        if let Some(n) = self.order {
            let _ = write!(out, " (order {n})");
        }
        out.push('\n');
        let p = &self.presentation;
        let _ = writeln!(
            out,
            "chain group: {} ({} classes)",
            factors(&p.invariant_factors, p.free_rank),
            p.class_count()
        );
        if let Some(c) = &self.center {
            let _ = writeln!(out, "center:      {}", factors(&c.center_invariants, 0));
        }
        let _ = writeln!(out, "C0:          {{{}}}", self.c0.join(", "));
        render_verification(&mut out, &self.verification);
        if let Some(t) = &self.timings {
            for (stage, ms) in t {
                let _ = writeln!(out, "  {stage}: {ms:.1} ms");
            }
        }
        out
    }
}

impl CatalogRunReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = match e.status {
                EntryStatus::Pass => "pass",
                EntryStatus::Fail => "FAIL",
                EntryStatus::Error => "ERROR",
            };
            let _ = write!(out, "{status:5} {}", e.id);
            if let Some(f) = &e.invariant_factors {
                let _ = write!(out, "  C = {}", factors(f, 0));
            }
            if let Some(err) = &e.error {
                let _ = write!(out, "  {err}");
            }
            out.push('\n');
            if let Some(v) = e.verification.as_ref().filter(|v| !v.passed) {
                render_verification(&mut out, v);
            }
        }
        for p in &self.pairs {
            let _ = writeln!(
                out,
                "pair l={}: {} -> {}, {} -> {}",
                p.l,
                p.dihedral,
                factors(&p.dihedral_factors, 0),
                p.dicyclic,
                factors(&p.dicyclic_factors, 0)
            );
        }
        let _ = writeln!(
            out,
            "{} entries, {}",
            self.entries.len(),
            if self.passed {
                "all passed"
            } else {
                "FAILURES"
            }
        );
        out
    }
}

impl TruncationJson {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.levels {
            let _ = writeln!(
                out,
                "level {:3}: {} labels, {}",
                l.level,
                l.window_size,
                factors(&l.invariant_factors, l.free_rank)
            );
        }
        let flag = match self.presentation.stabilized {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a (fewer than two levels)",
        };
        let _ = writeln!(out, "stabilized: {flag}");
        out
    }
}
