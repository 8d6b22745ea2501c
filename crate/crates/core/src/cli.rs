//! The `daisycube` command line.
//!
//! Exit codes: 0 success, 1 a property or identity failed, 2 bad input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{indices_all, indices_by, oracle_indices, verify};
use crate::daisy::daisy_closure_with;
use crate::error::Error;
use crate::families::Family;
use crate::graph::{CubeSubgraph, Limits, DEFAULT_MAX_VERTICES};
use crate::invariants::{verify_relation, IndexReport, Method};
use crate::io::{generators_from_json, graph_from_json, graph_to_json};
use crate::label::VertexLabel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "daisycube",
    version,
    about = "Daisy cubes, Wiener and Mostar indices"
)]
pub struct Cli {
    /// Refuse to enumerate graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph and print it as JSON.
    Generate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(short = 'n', long = "dim")]
        n: Option<u32>,
        /// Forbidden substring for `qnf`, written u_1...u_k.
        #[arg(long)]
        pattern: Option<String>,
        /// Generator JSON file for `daisy`.
        #[arg(long)]
        generators: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute Wiener and Mostar indices of a graph file.
    Indices {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every structural property and identity of a graph file.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate a family over a range of dimensions.
    Sweep {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Semicube,
    Oracle,
    Corollary,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: message for stderr plus exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            EXIT_INPUT
        } else {
            EXIT_PROPERTY
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Parses `std::env::args`, runs the command and returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = out.flush();
            eprintln!("daisycube: {}", f.message);
            f.code
        }
    }
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let limits = Limits::with_max_vertices(cli.max_vertices);
    match cli.command {
        Command::Generate {
            family,
            n,
            pattern,
            generators,
            out,
        } => {
            let g = generate(
                family,
                n,
                pattern.as_deref(),
                generators.as_deref(),
                &limits,
            )?;
            emit(stdout, out.as_deref(), &graph_to_json(&g))?;
            Ok(EXIT_OK)
        }
        Command::Indices { graph, method, out } => {
            let g = read_graph(&graph)?;
            let text = match method {
                MethodArg::All => {
                    #[derive(Serialize)]
                    struct AllReports {
                        reports: Vec<IndexReport>,
                        agreement: bool,
                    }
                    let reports = indices_all(&g)?;
                    to_json(&AllReports {
                        reports,
                        agreement: true,
                    })
                }
                MethodArg::Semicube => to_json(&indices_by(&g, Method::Semicube)?),
                MethodArg::Oracle => to_json(&indices_by(&g, Method::Oracle)?),
                MethodArg::Corollary => to_json(&indices_by(&g, Method::Corollary)?),
            };
            emit(stdout, out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify { graph, out } => {
            let g = read_graph(&graph)?;
            let v = verify(&g)?;
            emit(stdout, out.as_deref(), &to_json(&v))?;
            if v.passed {
                Ok(EXIT_OK)
            } else {
                eprintln!(
                    "daisycube: {}",
                    v.reason.as_deref().unwrap_or("verification failed")
                );
                Ok(EXIT_PROPERTY)
            }
        }
        Command::Sweep {
            family,
            n_min,
            n_max,
            pattern,
            format,
        } => sweep(
            family,
            n_min,
            n_max,
            pattern.as_deref(),
            format,
            &limits,
            stdout,
        ),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialize")
}

fn emit(stdout: &mut dyn Write, out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => writeln!(stdout, "{text}")?,
    }
    Ok(())
}

fn read_graph(path: &Path) -> Result<CubeSubgraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
    graph_from_json(&text).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn parse_pattern(pattern: Option<&str>) -> Result<Option<VertexLabel>, Failure> {
    pattern
        .map(|p| VertexLabel::parse(p).map_err(Failure::from))
        .transpose()
}

fn generate(
    family: Family,
    n: Option<u32>,
    pattern: Option<&str>,
    generators: Option<&Path>,
    limits: &Limits,
) -> Result<CubeSubgraph, Failure> {
    if family == Family::Daisy {
        let path = generators.ok_or_else(|| input_failure("family daisy requires --generators"))?;
        let text = fs::read_to_string(path)
            .map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
        let gens = generators_from_json(&text)
            .map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
        if let Some(n) = n {
            if n != gens.dim() {
                return Err(input_failure(format!(
                    "-n {n} does not match generator dimension {}",
                    gens.dim()
                )));
            }
        }
        return Ok(daisy_closure_with(&gens, limits)?);
    }
    let n = n.ok_or_else(|| input_failure(format!("family {family} requires -n")))?;
    Ok(family.build(n, parse_pattern(pattern)?, limits)?)
}

/// One line of `daisycube sweep`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub n: u32,
    #[serde(rename = "V")]
    pub vertex_count: u64,
    #[serde(rename = "E")]
    pub edge_count: u64,
    #[serde(rename = "W")]
    pub wiener: u128,
    #[serde(rename = "Mo")]
    pub mostar: u128,
    pub residual: i128,
    pub relation_holds: bool,
    /// `all` when semicube, oracle and corollary were cross-checked; `oracle`
    /// for labelings that are not downward closed.
    pub method: String,
}

/// Computes one sweep row, cross-checking every applicable method.
pub fn sweep_row(family: Family, n: u32, g: &CubeSubgraph) -> crate::Result<SweepRow> {
    let (report, method) = if g.is_downward_closed() {
        (indices_all(g)?[0], "all")
    } else {
        (oracle_indices(g)?, "oracle")
    };
    Ok(SweepRow {
        family: family.name().to_string(),
        n,
        vertex_count: report.vertex_count,
        edge_count: report.edge_count,
        wiener: report.wiener,
        mostar: report.mostar,
        residual: report.residual,
        relation_holds: verify_relation(&report),
        method: method.to_string(),
    })
}

fn sweep(
    family: Family,
    n_min: u32,
    n_max: u32,
    pattern: Option<&str>,
    format: Format,
    limits: &Limits,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    if n_min > n_max {
        return Err(input_failure(format!("empty range {n_min}..={n_max}")));
    }
    if family == Family::Daisy {
        return Err(input_failure("sweep does not support family daisy"));
    }
    let pattern = parse_pattern(pattern)?;

    let mut rows = Vec::new();
    let mut failure = None;
    let mut csv_out = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "family",
                "n",
                "V",
                "E",
                "W",
                "Mo",
                "residual",
                "relation_holds",
            ])
            .map_err(|e| input_failure(e.to_string()))?;
            Some(w)
        }
        Format::Json => None,
    };
    for n in n_min..=n_max {
        let row = family
            .build(n, pattern, limits)
            .and_then(|g| sweep_row(family, n, &g));
        match row {
            Ok(row) => {
                if let Some(w) = csv_out.as_mut() {
                    w.write_record([
                        row.family.clone(),
                        row.n.to_string(),
                        row.vertex_count.to_string(),
                        row.edge_count.to_string(),
                        row.wiener.to_string(),
                        row.mostar.to_string(),
                        row.residual.to_string(),
                        row.relation_holds.to_string(),
                    ])
                    .map_err(|e| input_failure(e.to_string()))?;
                }
                rows.push(row);
            }
            Err(e) => {
                failure = Some(Failure {
                    message: format!("{family} n={n}: {e}"),
                    ..Failure::from(e)
                });
                break;
            }
        }
    }
    match csv_out {
        Some(w) => {
            let bytes = w.into_inner().map_err(|e| input_failure(e.to_string()))?;
            stdout.write_all(&bytes)?;
        }
        None => writeln!(stdout, "{}", to_json(&rows))?,
    }
    match failure {
        Some(f) => Err(f),
        None => Ok(EXIT_OK),
    }
}
