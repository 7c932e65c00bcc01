use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use chaingroup_cli::cache::{Cache, CACHE_DIR_ENV};
use chaingroup_cli::exit;
use chaingroup_cli::formats::{parse_group_arg, read_fusion_file, read_table_file};
use chaingroup_cli::reports::EntryStatus;
use chaingroup_cli::runner::{self, Options, DEFAULT_MAX_ORDER};
use chaingroup_core::groups::DEFAULT_ORDER_BOUND;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Chain groups of finite groups and fusion rings, checked against the
/// center of the group.
#[derive(Parser)]
#[command(name = "chaingroup", version)]
struct Cli {
    /// Directory for cached character tables and fusion rings.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group or fusion ring and run every applicable check.
    #[command(group(ArgGroup::new("input").required(true).args(["group", "fusion"])))]
    Analyze {
        /// `cyclic:6`, `dicyclic:2xcyclic:3`, or group spec JSON.
        #[arg(long)]
        group: Option<String>,
        /// Fusion ring JSON file.
        #[arg(long)]
        fusion: Option<PathBuf>,
        /// Character table JSON to use instead of computing one.
        #[arg(long, requires = "group")]
        table: Option<PathBuf>,
        /// Targets Z/m for t-map enumeration: `2..12` or `3,5,7`.
        #[arg(long, default_value = "2..12")]
        moduli: String,
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Include per-stage wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Verify every catalog group up to an order bound.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value = "2..12")]
        moduli: String,
        /// Additional fusion ring files to verify alongside the catalog.
        #[arg(long)]
        fusion: Vec<PathBuf>,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Chain groups of truncations of the SU(2) fusion rule.
    Su2 {
        #[arg(long)]
        levels: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Show the built-in catalog.
    Catalog {
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn emit<T: Serialize>(
    format: Format,
    report: &T,
    text: impl FnOnce() -> String,
) -> anyhow::Result<()> {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).context("serializing report")?
        ),
        Format::Text => print!("{}", text()),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let cache = cli.cache_dir.map(Cache::new);
    match cli.command {
        Command::Analyze {
            group,
            fusion,
            table,
            moduli,
            max_order,
            format,
            timings,
        } => {
            let opts = Options {
                moduli: runner::parse_moduli(&moduli)?,
                order_bound: max_order,
                cache,
                timings,
            };
            let report = match (group, fusion) {
                (Some(g), _) => {
                    let spec = parse_group_arg(&g)?;
                    let table = table.as_deref().map(read_table_file).transpose()?;
                    runner::analyze_group(&spec, table, &opts)?
                }
                (None, Some(path)) => {
                    let ring = read_fusion_file(&path)?;
                    runner::analyze_fusion(&path.display().to_string(), ring, &opts)
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            emit(format, &report, || report.to_text())?;
            Ok(if report.verification.passed {
                exit::SUCCESS
            } else {
                exit::STATEMENT_FAILURE
            })
        }
        Command::VerifyAll {
            max_order,
            moduli,
            fusion,
            jobs,
            format,
        } => {
            let opts = Options {
                moduli: runner::parse_moduli(&moduli)?,
                cache,
                ..Options::default()
            };
            let report = runner::verify_all(max_order, &fusion, jobs, &opts)?;
            emit(format, &report, || report.to_text())?;
            Ok(match report.worst_status() {
                None | Some(EntryStatus::Pass) => exit::SUCCESS,
                Some(EntryStatus::Fail) => exit::STATEMENT_FAILURE,
                Some(EntryStatus::Error) => exit::INPUT_ERROR,
            })
        }
        Command::Su2 { levels, format } => {
            let report = runner::su2(levels)?;
            emit(format, &report, || report.to_text())?;
            Ok(exit::SUCCESS)
        }
        Command::Catalog { list: _, format } => {
            let listing = runner::catalog_listing();
            emit(format, &listing, || {
                listing
                    .iter()
                    .map(|e| format!("{:<40} {}\n", e.id, e.order))
                    .collect()
            })?;
            Ok(exit::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            // statement failures are reported through `Ok`; anything else is
            // bad input or an upstream error on it
            eprintln!("error: {e:#}");
            ExitCode::from(exit::INPUT_ERROR)
        }
    }
}
