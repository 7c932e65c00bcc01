//! The commands, as library functions returning reports.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use chaingroup_core::chaingroup::truncated_chain_group;
use chaingroup_core::charmod::{character_table_mod_p, ModularCharacterTable};
use chaingroup_core::fusion::{fusion_from_character_table, su2_fusion_oracle, FusionRing};
use chaingroup_core::groups::{default_catalog, GroupSpec, DEFAULT_ORDER_BOUND};
use chaingroup_core::verify::{
    compute_c0, verify_group, verify_ring, VerificationReport, DEFAULT_MODULI,
};
use chaingroup_core::{Error, GroupAnalysis, RingAnalysis};
use rayon::prelude::*;

use crate::cache::Cache;
use crate::formats::read_fusion_file;
use crate::reports::{
    AnalysisReport, CatalogListing, CatalogRunEntry, CatalogRunReport, CenterReport, EntryStatus,
    LevelReport, PairComparison, PresentationReport, SubjectKind, TruncationJson, VerificationJson,
};
use crate::CliError;

/// Default order bound for `verify-all`; covers the whole catalog.
pub const DEFAULT_MAX_ORDER: usize = 512;

/// Stage name ↦ wall-clock milliseconds.
pub type Timings = BTreeMap<String, f64>;

#[derive(Clone, Debug)]
pub struct Options {
    pub moduli: Vec<u64>,
    /// Groups larger than this are refused.
    pub order_bound: usize,
    pub cache: Option<Cache>,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            moduli: DEFAULT_MODULI.collect(),
            order_bound: DEFAULT_ORDER_BOUND,
            cache: None,
            timings: false,
        }
    }
}

/// Parses `2..12` (inclusive), `2..=12` or a comma list such as `3,5,7`.
pub fn parse_moduli(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = || {
        CliError::Input(format!(
            "moduli `{s}`: expected `a..b` or a comma-separated list of positive integers"
        ))
    };
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .ok()
            .filter(|&m| m >= 1)
            .ok_or_else(bad)
    };
    let out = if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
        (a..=b).collect::<Vec<_>>()
    } else {
        s.split(',').map(num).collect::<Result<_, _>>()?
    };
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

struct Stopwatch {
    enabled: bool,
    last: Instant,
    stages: BTreeMap<String, f64>,
}

impl Stopwatch {
    fn new(enabled: bool) -> Self {
        Self {
            enabled,
            last: Instant::now(),
            stages: BTreeMap::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.stages
            .insert(stage.to_string(), (now - self.last).as_secs_f64() * 1e3);
        self.last = now;
    }

    fn finish(self) -> Option<Timings> {
        self.enabled.then_some(self.stages)
    }
}

/// Builds and analyzes a group. A supplied `table` bypasses both the modular
/// computation and the cache; it must match the group's classes.
pub fn analyze_group_full(
    spec: &GroupSpec,
    table: Option<ModularCharacterTable>,
    opts: &Options,
) -> Result<(GroupAnalysis, VerificationReport, Option<Timings>), CliError> {
    let mut clock = Stopwatch::new(opts.timings);
    let group = spec.build(opts.order_bound).map_err(Error::from)?;
    let classes = group.conjugacy_classes();
    clock.lap("group");
    let (table, ring) = match table {
        Some(t) => {
            if t.class_sizes() != classes.sizes().as_slice()
                || t.inverse_class() != classes.inverse_class()
            {
                return Err(CliError::Input(
                    "character table does not match the group's conjugacy classes".into(),
                ));
            }
            let ring = fusion_from_character_table(&t).map_err(Error::from)?;
            (t, ring)
        }
        None => match opts.cache.as_ref().and_then(|c| c.load(spec)) {
            Some(hit) => hit,
            None => {
                let t = character_table_mod_p(&group, &classes).map_err(Error::from)?;
                let ring = fusion_from_character_table(&t).map_err(Error::from)?;
                if let Some(cache) = &opts.cache {
                    // a failed write only costs a recomputation next time
                    if let Err(e) = cache.store(spec, &t, &ring) {
                        eprintln!("warning: {e}");
                    }
                }
                (t, ring)
            }
        },
    };
    clock.lap("table");
    let analysis = GroupAnalysis::with_ring(group, classes, table, ring)?;
    clock.lap("analysis");
    let verification = verify_group(spec.id(), &analysis, &opts.moduli);
    clock.lap("verification");
    Ok((analysis, verification, clock.finish()))
}

pub fn analyze_group(
    spec: &GroupSpec,
    table: Option<ModularCharacterTable>,
    opts: &Options,
) -> Result<AnalysisReport, CliError> {
    let (a, v, timings) = analyze_group_full(spec, table, opts)?;
    Ok(group_report(spec.id(), &a, &v, timings))
}

pub fn group_report(
    subject: String,
    a: &GroupAnalysis,
    v: &VerificationReport,
    timings: Option<Timings>,
) -> AnalysisReport {
    let ring = &a.ring.ring;
    let center = CenterReport {
        center_invariants: a.center.invariant_factors().to_vec(),
        generators: a.center.generator_elements().to_vec(),
        r_g: (0..ring.rank())
            .map(|i| {
                (
                    ring.label(i).to_string(),
                    a.restriction.images[i].exponents.clone(),
                )
            })
            .collect(),
        abelianization_dual: a.abelianization.clone(),
    };
    AnalysisReport {
        subject,
        kind: SubjectKind::Group,
        order: Some(a.group.order()),
        presentation: PresentationReport::new(&a.ring.presentation, None),
        center: Some(center),
        c0: c0_labels(ring),
        verification: v.into(),
        timings,
    }
}

fn c0_labels(ring: &FusionRing) -> Vec<String> {
    compute_c0(ring)
        .into_iter()
        .map(|i| ring.label(i).to_string())
        .collect()
}

/// Ring-only analysis; center statements are reported not applicable.
pub fn analyze_fusion(subject: &str, ring: FusionRing, opts: &Options) -> AnalysisReport {
    let mut clock = Stopwatch::new(opts.timings);
    let a = RingAnalysis::new(ring);
    clock.lap("analysis");
    let v = verify_ring(subject, &a, &opts.moduli);
    clock.lap("verification");
    AnalysisReport {
        subject: subject.to_string(),
        kind: SubjectKind::Fusion,
        order: None,
        presentation: PresentationReport::new(&a.presentation, None),
        center: None,
        c0: c0_labels(&a.ring),
        verification: (&v).into(),
        timings: clock.finish(),
    }
}

fn entry_status(v: &VerificationJson) -> EntryStatus {
    if v.passed {
        EntryStatus::Pass
    } else {
        EntryStatus::Fail
    }
}

fn error_entry(id: String, order: Option<usize>, e: CliError) -> CatalogRunEntry {
    CatalogRunEntry {
        id,
        order,
        status: EntryStatus::Error,
        error: Some(e.to_string()),
        invariant_factors: None,
        center_invariants: None,
        verification: None,
    }
}

fn run_catalog_entry(
    id: String,
    spec: &GroupSpec,
    order: usize,
    opts: &Options,
) -> CatalogRunEntry {
    match analyze_group(spec, None, opts) {
        Ok(r) => CatalogRunEntry {
            id,
            order: Some(order),
            status: entry_status(&r.verification),
            error: None,
            invariant_factors: Some(r.presentation.invariant_factors),
            center_invariants: r.center.map(|c| c.center_invariants),
            verification: Some(r.verification),
        },
        Err(e) => error_entry(id, Some(order), e),
    }
}

fn run_fusion_entry(path: &std::path::Path, opts: &Options) -> CatalogRunEntry {
    let id = format!("fusion:{}", path.display());
    match read_fusion_file(path) {
        Ok(ring) => {
            let r = analyze_fusion(&id, ring, opts);
            CatalogRunEntry {
                id,
                order: None,
                status: entry_status(&r.verification),
                error: None,
                invariant_factors: Some(r.presentation.invariant_factors),
                center_invariants: None,
                verification: Some(r.verification),
            }
        }
        Err(e) => error_entry(id, None, e),
    }
}

/// Verifies every catalog group of order at most `max_order`, plus any extra
/// fusion files, on a pool of `jobs` workers (0: one per core). Entries
/// appear in catalog order whatever the completion order.
pub fn verify_all(
    max_order: usize,
    fusion_files: &[PathBuf],
    jobs: usize,
    opts: &Options,
) -> Result<CatalogRunReport, CliError> {
    let catalog: Vec<_> = default_catalog()
        .into_iter()
        .filter(|e| e.order <= max_order)
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Input(format!("worker pool: {e}")))?;
    let opts = Options {
        order_bound: opts.order_bound.max(max_order),
        ..opts.clone()
    };
    let (mut entries, fusion_entries) = pool.install(|| {
        rayon::join(
            || {
                catalog
                    .par_iter()
                    .map(|e| run_catalog_entry(e.id.clone(), &e.spec, e.order, &opts))
                    .collect::<Vec<_>>()
            },
            || {
                fusion_files
                    .par_iter()
                    .map(|p| run_fusion_entry(p, &opts))
                    .collect::<Vec<_>>()
            },
        )
    });
    entries.extend(fusion_entries);

    let factors_of = |spec: GroupSpec| {
        let id = spec.id();
        entries
            .iter()
            .find(|e| e.id == id)
            .and_then(|e| e.invariant_factors.clone())
            .map(|f| (id, f))
    };
    let pairs = (1..=6u64)
        .filter_map(|l| {
            let (d, df) = factors_of(GroupSpec::named("dihedral", &[4 * l as i64]))?;
            let (q, qf) = factors_of(GroupSpec::named("dicyclic", &[2 * l as i64]))?;
            Some(PairComparison {
                l,
                agree: df == qf,
                dihedral: d,
                dicyclic: q,
                dihedral_factors: df,
                dicyclic_factors: qf,
            })
        })
        .collect();
    let passed = entries.iter().all(|e| e.status == EntryStatus::Pass);
    Ok(CatalogRunReport {
        max_order,
        passed,
        entries,
        pairs,
    })
}

/// Chain groups of the SU(2) fusion rule truncated at levels `1..=levels`.
pub fn su2(levels: usize) -> Result<TruncationJson, CliError> {
    if levels == 0 {
        return Err(CliError::Input("--levels must be at least 1".into()));
    }
    let report = truncated_chain_group(&su2_fusion_oracle(), levels);
    let last = report.levels.last().expect("at least one level");
    Ok(TruncationJson {
        levels: report
            .levels
            .iter()
            .map(|l| LevelReport {
                level: l.level,
                window_size: l.window.len(),
                invariant_factors: l.presentation.invariant_factors().to_vec(),
                free_rank: l.presentation.free_rank(),
            })
            .collect(),
        presentation: PresentationReport::new(&last.presentation, report.stabilized),
    })
}

pub fn catalog_listing() -> Vec<CatalogListing> {
    default_catalog()
        .into_iter()
        .map(|e| CatalogListing {
            id: e.id,
            order: e.order,
        })
        .collect()
}
