use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gallai_product::catalog::{generate, named, GenKind};
use gallai_product::document::DecompositionDocument;
use gallai_product::dot::product_dot;
use gallai_product::oracle::{min_path_decomposition, DEFAULT_ORACLE_BUDGET};
use gallai_product::structured::{decompose, verify_product};
use gallai_product::sweep::{grid_instances, run_sweep, Grid};
use gallai_product::verify::verify_decomposition;
use gallai_product::{Error, Graph, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "gallai", version, about = "Path decompositions of Cartesian products within Gallai's bound")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bound {
    /// `⌈mn/2⌉` for `G □ H`, `⌈n/2⌉` for a single graph.
    HalfMn,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decompose G □ H and verify the result.
    Decompose {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "half-mn")]
        bound: Bound,
    },
    /// Check a decomposition document against G □ H.
    Verify {
        decomposition: PathBuf,
        /// Defaults to the factor stored in the document.
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "half-mn")]
        bound: Bound,
    },
    /// Exact minimum path decomposition of a small graph.
    Oracle {
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random graph, as an edge list unless `--format json`.
    Gen {
        kind: GenKind,
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Decompose and verify every instance of a grid.
    Sweep {
        grid: Grid,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "half-mn")]
        bound: Bound,
    },
    /// Decompose G □ H and write the product as Graphviz with path labels.
    ExportDot {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure with its exit code.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget(_) => 3,
            Error::Construction(_) => 1,
            _ => 2,
        };
        Exit(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(2, msg.into())
}

/// A file path, or a name understood by [`named`].
fn load_graph(spec: &str) -> Result<Graph, Exit> {
    let path = Path::new(spec);
    if !path.exists() {
        return named(spec).ok_or_else(|| usage(format!("{spec}: no such file or graph name")));
    }
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{spec}: {e}")))?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed).map_err(|e| usage(format!("{spec}: {e}")));
    }
    let g = if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) {
        Graph::parse_graph6(trimmed)
    } else {
        Graph::parse_edge_list(&text)
    };
    g.map_err(|e| usage(format!("{spec}: {e}")))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Exit> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Exit(2, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct OracleDocument {
    schema_version: u32,
    g: Graph,
    value: usize,
    lower_bound: usize,
    nodes: u64,
    paths: Vec<Vec<usize>>,
    verified: bool,
}

#[derive(Serialize)]
struct VerifyDocument {
    schema_version: u32,
    report: gallai_product::verify::VerificationReport,
}

fn run(cmd: Cmd) -> Result<u8, Exit> {
    match cmd {
        Cmd::Decompose { g, h, out, format, bound: Bound::HalfMn } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let d = decompose(&g, &h)?;
            let doc = DecompositionDocument::new(&g, &h, &d);
            match format {
                Format::Json => emit(&out, &json(&doc))?,
                Format::Dot => emit(&out, &product_dot(&g, &h, &d))?,
            }
            Ok(if doc.verified { 0 } else { 1 })
        }
        Cmd::Verify { decomposition, g, h, out, bound: Bound::HalfMn } => {
            let text =
                fs::read_to_string(&decomposition).map_err(|e| usage(format!("{}: {e}", decomposition.display())))?;
            let doc: DecompositionDocument =
                serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", decomposition.display())))?;
            let g = g.map(|s| load_graph(&s)).transpose()?.unwrap_or_else(|| doc.g.clone());
            let h = h.map(|s| load_graph(&s)).transpose()?.unwrap_or_else(|| doc.h.clone());
            let d = doc.decomposition();
            let mut report = verify_product(&g, &h, &d);
            if d.declared_count != d.len() {
                report
                    .failures
                    .push(("declared_count".into(), format!("declared {} but found {}", d.declared_count, d.len())));
                report.passed = false;
            }
            emit(&out, &json(&VerifyDocument { schema_version: SCHEMA_VERSION, report: report.clone() }))?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Cmd::Oracle { g, budget, out } => {
            let g = load_graph(&g)?;
            let r = min_path_decomposition(&g, budget)?;
            let verified = verify_decomposition(&g, &r.paths).failures.iter().all(|(k, _)| k == "bound");
            let doc = OracleDocument {
                schema_version: SCHEMA_VERSION,
                g,
                value: r.value,
                lower_bound: r.lower_bound,
                nodes: r.nodes,
                paths: r.paths,
                verified,
            };
            emit(&out, &json(&doc))?;
            Ok(if verified { 0 } else { 1 })
        }
        Cmd::Gen { kind, size, seed, out, format } => {
            let g = generate(kind, size, seed)?;
            let text = match format {
                Some(Format::Json) => json(&g),
                Some(Format::Dot) => {
                    let mut s = String::from("graph g {\n");
                    for v in 0..g.n() {
                        s.push_str(&format!("  {v};\n"));
                    }
                    for &(a, b) in g.edges() {
                        s.push_str(&format!("  {a} -- {b};\n"));
                    }
                    s.push_str("}\n");
                    s
                }
                None => g.to_edge_list(),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Sweep { grid, seed, out, bound: Bound::HalfMn } => {
            let report = run_sweep(&grid_instances(grid, seed)?);
            eprintln!(
                "{} instances, {} passed, {} failed, max ratio {:.3}",
                report.instances, report.passed, report.failed, report.max_ratio
            );
            let theorems = !report.coverage.is_empty();
            for (branch, count) in &report.coverage {
                eprintln!("  {branch:<28} {count}");
            }
            for branch in report.dead_branches.iter().filter(|_| theorems) {
                eprintln!("  {branch:<28} 0");
            }
            emit(&out, &json(&report))?;
            Ok(if report.ok() { 0 } else { 1 })
        }
        Cmd::ExportDot { g, h, out } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let d = decompose(&g, &h)?;
            emit(&out, &product_dot(&g, &h, &d))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
