//! Command-line surface: argument parsing, JSON reports, and exit codes.
//!
//! Exit codes: 0 = success / prime / labeling found; 1 = not prime /
//! search exhausted / no witness; 2 = usage or parameter error; 3 = search
//! budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use prime_labeling::pillai::pillai_witness;
use prime_labeling::{
    brute_force_search, build_family, label_family, verify_labeling, FamilyInstance, FamilyParams,
    Graph, SearchBudget, SearchOutcome, SearchStatus, VerificationReport,
};

use crate::document::{parse_family, GraphDocument};
use crate::dot::export_dot;
use crate::driver::{run_backtracking, WallClock};

#[derive(Parser)]
#[command(
    name = "prime-labeling",
    version,
    about = "Build, label, verify, and search prime vertex labelings of structured graph families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family instance and write its graph document.
    ///
    /// Families and parameters: `cps <n> <m>` (an n-cycle, a spur on each
    /// cycle vertex, m leaves per spur), `chain <n> <m>` (m n-cycles glued
    /// in a row), `fib <m>` (m cycles with Fibonacci-sized detours),
    /// `prism <n>`, `book <n> <m>` (n rows, m pages).
    Build {
        /// Family name: cps, chain, fib, prism, or book.
        family: String,
        /// Positional family parameters, e.g. `cps 5 6`.
        params: Vec<u64>,
        /// Write the document to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a family instance, apply its labeling scheme, verify the
    /// result, and write the labeled document.
    Label {
        /// Family name: cps, chain, fib, prism, or book.
        family: String,
        /// Positional family parameters, e.g. `cps 5 6`.
        params: Vec<u64>,
        /// Write the labeled document to this file instead of stdout (the
        /// verification report then goes to stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the labeling embedded in a graph document.
    Verify {
        /// Labeled graph document to check.
        file: PathBuf,
    },
    /// Search a graph document for a prime labeling from scratch.
    Search {
        /// Graph document to search (any labeling in it is ignored).
        file: PathBuf,
        /// Stop after this many label-placement attempts.
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Stop after this many seconds of wall time.
        #[arg(long)]
        budget_secs: Option<u64>,
        /// Enumerate all |V|! permutations instead of backtracking
        /// (graphs of at most 10 vertices).
        #[arg(long)]
        brute: bool,
        /// Worker threads; above 1, the search splits by first label.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Skip interchangeable first labels (sound for existence, but the
        /// node count no longer reflects the full space).
        #[arg(long)]
        symmetry_reduction: bool,
    },
    /// Convert a graph document to DOT or re-emit its canonical JSON.
    Export {
        /// Graph document to convert.
        file: PathBuf,
        /// Output format.
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
    /// Find the smallest window of k consecutive integers in which no
    /// element is coprime to all the others.
    Pillai {
        /// Window width (at least 2).
        k: u32,
        /// Largest window start to try.
        limit: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Serialize)]
struct RangeViolationJson {
    vertex: u32,
    label: u64,
}

#[derive(Serialize)]
struct DuplicateLabelJson {
    label: u64,
    vertices: Vec<u32>,
}

#[derive(Serialize)]
struct CoprimalityViolationJson {
    u: u32,
    v: u32,
    label_u: u64,
    label_v: u64,
    gcd: u64,
}

#[derive(Serialize)]
struct ReportJson {
    is_prime: bool,
    vertex_count: u32,
    edge_count: usize,
    range_violations: Vec<RangeViolationJson>,
    duplicate_labels: Vec<DuplicateLabelJson>,
    coprimality_violations: Vec<CoprimalityViolationJson>,
}

impl ReportJson {
    fn new(graph: &Graph, report: &VerificationReport) -> Self {
        ReportJson {
            is_prime: report.is_prime,
            vertex_count: graph.vertex_count(),
            edge_count: graph.edge_count(),
            range_violations: report
                .range_violations
                .iter()
                .map(|&(vertex, label)| RangeViolationJson { vertex, label })
                .collect(),
            duplicate_labels: report
                .duplicate_labels
                .iter()
                .map(|(label, vertices)| DuplicateLabelJson {
                    label: *label,
                    vertices: vertices.clone(),
                })
                .collect(),
            coprimality_violations: report
                .coprimality_violations
                .iter()
                .map(|v| CoprimalityViolationJson {
                    u: v.u,
                    v: v.v,
                    label_u: v.label_u,
                    label_v: v.label_v,
                    gcd: v.gcd,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct OutcomeJson {
    status: &'static str,
    nodes_explored: u64,
    elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<u64>>,
}

impl OutcomeJson {
    fn new(outcome: &SearchOutcome) -> Self {
        let (status, labels) = match &outcome.status {
            SearchStatus::Found(labeling) => ("found", Some(labeling.as_slice().to_vec())),
            SearchStatus::Exhausted => ("exhausted", None),
            SearchStatus::BudgetExceeded => ("budget_exceeded", None),
        };
        OutcomeJson {
            status,
            nodes_explored: outcome.nodes_explored,
            elapsed_ms: outcome.elapsed.as_millis(),
            labels,
        }
    }
}

#[derive(Serialize)]
struct PillaiJson {
    k: u32,
    limit: u64,
    witness: Option<u64>,
}

fn report_summary(report: &VerificationReport, graph: &Graph) -> String {
    if report.is_prime {
        format!(
            "prime labeling verified: {} vertices, {} edges, every edge coprime",
            graph.vertex_count(),
            graph.edge_count()
        )
    } else {
        format!(
            "not a prime labeling: {} label(s) out of range, {} duplicated, {} non-coprime edge(s)",
            report.range_violations.len(),
            report.duplicate_labels.len(),
            report.coprimality_violations.len()
        )
    }
}

fn outcome_summary(outcome: &SearchOutcome) -> String {
    let ms = outcome.elapsed.as_millis();
    match outcome.status {
        SearchStatus::Found(_) => format!(
            "found a prime labeling after {} placement(s) in {ms} ms",
            outcome.nodes_explored
        ),
        SearchStatus::Exhausted => format!(
            "no prime labeling exists: space exhausted after {} placement(s) in {ms} ms",
            outcome.nodes_explored
        ),
        SearchStatus::BudgetExceeded => format!(
            "budget exceeded after {} placement(s) in {ms} ms; existence undecided",
            outcome.nodes_explored
        ),
    }
}

/// Largest instance the command line will build. The library itself handles
/// anything whose ids fit in 32 bits; this cap just keeps a typo'd parameter
/// from turning into a multi-gigabyte allocation.
const MAX_CLI_VERTICES: u64 = 10_000_000;

fn build_checked(family_params: &FamilyParams) -> Result<FamilyInstance> {
    if let Some(count) = family_params.vertex_count() {
        if count > MAX_CLI_VERTICES {
            bail!(
                "instance would have {count} vertices; builds are capped at {MAX_CLI_VERTICES} \
                 (use the library directly for larger graphs)"
            );
        }
    }
    Ok(build_family(family_params)?)
}

fn read_document(path: &Path) -> Result<GraphDocument> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    GraphDocument::from_json(&text).with_context(|| format!("in {}", path.display()))
}

/// Writes the document to `out` when given, else to stdout. Returns whether
/// stdout is still free for other output.
fn emit_document(doc: &GraphDocument, out: Option<&Path>) -> Result<bool> {
    match out {
        Some(path) => {
            fs::write(path, doc.to_json())
                .with_context(|| format!("cannot write {}", path.display()))?;
            Ok(true)
        }
        None => {
            print!("{}", doc.to_json());
            Ok(false)
        }
    }
}

fn exit_code_for(outcome: &SearchOutcome) -> i32 {
    match outcome.status {
        SearchStatus::Found(_) => 0,
        SearchStatus::Exhausted => 1,
        SearchStatus::BudgetExceeded => 3,
    }
}

fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build {
            family,
            params,
            out,
        } => {
            let family_params = parse_family(&family, &params)?;
            let inst = build_checked(&family_params)?;
            let doc = GraphDocument::from_instance(&inst, None);
            emit_document(&doc, out.as_deref())?;
            eprintln!(
                "built {family} {:?}: {} vertices, {} edges",
                params,
                inst.graph().vertex_count(),
                inst.graph().edge_count()
            );
            Ok(0)
        }
        Command::Label {
            family,
            params,
            out,
        } => {
            let family_params = parse_family(&family, &params)?;
            let inst = build_checked(&family_params)?;
            let labeling = label_family(&inst)?;
            let report = verify_labeling(inst.graph(), &labeling)?;
            let doc = GraphDocument::from_instance(&inst, Some(&labeling));
            let stdout_free = emit_document(&doc, out.as_deref())?;
            if stdout_free {
                let json = ReportJson::new(inst.graph(), &report);
                println!("{}", serde_json::to_string_pretty(&json)?);
            }
            eprintln!("{}", report_summary(&report, inst.graph()));
            Ok(if report.is_prime { 0 } else { 1 })
        }
        Command::Verify { file } => {
            let doc = read_document(&file)?;
            let graph = doc.graph()?;
            let labeling = doc
                .labeling()
                .context("document carries no labeling to verify")?;
            let report = verify_labeling(&graph, &labeling)?;
            let json = ReportJson::new(&graph, &report);
            println!("{}", serde_json::to_string_pretty(&json)?);
            eprintln!("{}", report_summary(&report, &graph));
            Ok(if report.is_prime { 0 } else { 1 })
        }
        Command::Search {
            file,
            budget_nodes,
            budget_secs,
            brute,
            threads,
            symmetry_reduction,
        } => {
            let doc = read_document(&file)?;
            let graph = doc.graph()?;
            let outcome = if brute {
                let clock = WallClock::new();
                brute_force_search(&graph, &clock)?
            } else {
                let budget = SearchBudget {
                    max_nodes: budget_nodes,
                    max_time: budget_secs.map(Duration::from_secs),
                };
                run_backtracking(&graph, &budget, symmetry_reduction, threads)
            };
            let json = OutcomeJson::new(&outcome);
            println!("{}", serde_json::to_string_pretty(&json)?);
            eprintln!("{}", outcome_summary(&outcome));
            Ok(exit_code_for(&outcome))
        }
        Command::Export { file, format } => {
            let doc = read_document(&file)?;
            match format {
                ExportFormat::Dot => {
                    let graph = doc.graph()?;
                    print!("{}", export_dot(&graph, doc.labeling().as_ref()));
                }
                ExportFormat::Json => print!("{}", doc.to_json()),
            }
            Ok(0)
        }
        Command::Pillai { k, limit } => {
            let witness = pillai_witness(k, limit)?;
            let json = PillaiJson { k, limit, witness };
            println!("{}", serde_json::to_string_pretty(&json)?);
            match witness {
                Some(s) => eprintln!("width-{k} witness window starts at {s}"),
                None => eprintln!("no width-{k} witness window starts at or below {limit}"),
            }
            Ok(if witness.is_some() { 0 } else { 1 })
        }
    }
}

/// Parses arguments, runs the selected subcommand, and returns the process
/// exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    }
}
