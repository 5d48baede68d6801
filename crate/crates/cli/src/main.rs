mod args;
mod check;
mod gen;
mod scan;
mod witness;

use std::fmt;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use scl_core::graph::{parse_graph6_with_cap, DEFAULT_MAX_N, HARD_MAX_N};
use scl_core::scan::{parse_graph6_lines, AlphaSpec, Grid, LimitSettings};
use scl_core::stability::SearchMode;
use scl_core::{Graph, Jobs, Tolerances};

use args::{Cli, Command, GridArgs, InputArgs, ModeArg, UsizeList};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Violation = 1,
    Usage = 2,
    Io = 3,
    Discovery = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl fmt::Display) -> Self {
        Failure { status: Status::Usage, message: message.to_string() }
    }

    pub fn io(message: impl fmt::Display) -> Self {
        Failure { status: Status::Io, message: message.to_string() }
    }
}

pub type CmdResult = Result<Status, Failure>;

/// Vertex cap, overridable with `SCL_MAX_N`.
pub fn vertex_cap() -> Result<usize, Failure> {
    match std::env::var("SCL_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if (1..=HARD_MAX_N).contains(&n) => Ok(n),
            _ => Err(Failure::usage(format!("SCL_MAX_N must be an integer in 1..={HARD_MAX_N}, got `{v}`"))),
        },
    }
}

pub fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(Failure::io)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{text}").map_err(|e| Failure::io(format!("stdout: {e}")))
}

/// Inline graphs are usage errors when malformed; file contents are I/O errors.
pub fn load_graphs(input: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let cap = vertex_cap()?;
    let mut graphs = Vec::new();
    for text in &input.g6 {
        graphs.push(parse_graph6_with_cap(text, cap).map_err(|e| Failure::usage(format!("--g6 {text:?}: {e}")))?);
    }
    if let Some(path) = &input.file {
        let text = read_input(path)?;
        let parsed = parse_graph6_lines(&text, cap)
            .map_err(|(line, e)| Failure::io(format!("{}:{line}: {e}", path.display())))?;
        graphs.extend(parsed);
    }
    if graphs.is_empty() {
        return Err(Failure::usage("no input graphs; pass --g6 or --file"));
    }
    Ok(graphs)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::io(format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn flatten(lists: &[UsizeList]) -> Option<Vec<usize>> {
    (!lists.is_empty()).then(|| lists.iter().flat_map(|l| l.0.iter().copied()).collect())
}

pub fn build_grid(g: &GridArgs) -> Grid {
    Grid {
        r: flatten(&g.r),
        s: flatten(&g.s),
        l: flatten(&g.l),
        q: flatten(&g.q),
        alpha: (!g.alpha.is_empty())
            .then(|| g.alpha.iter().flat_map(|a| a.0.iter().cloned()).collect::<Vec<AlphaSpec>>()),
    }
}

pub fn search_mode(m: ModeArg) -> SearchMode {
    match m {
        ModeArg::Exhaustive => SearchMode::Exhaustive,
        ModeArg::Heuristic => SearchMode::Heuristic,
    }
}

pub fn jobs(n: usize) -> Jobs {
    if n == 0 {
        Jobs::Auto
    } else {
        Jobs::Fixed(n)
    }
}

pub fn tolerances(factor: f64) -> Result<Tolerances, Failure> {
    if !(factor.is_finite() && factor > 0.0) {
        return Err(Failure::usage(format!("--tol must be a positive factor, got {factor}")));
    }
    Ok(Tolerances::default().scaled(factor))
}

pub fn limit_settings(g: &GridArgs, factor: f64) -> LimitSettings {
    LimitSettings { tol: g.limit_tol * factor, max_length: g.max_length }
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    exit_code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => gen::run(a),
        Command::Check(a) => check::run(a, cli.tol),
        Command::Scan(a) => scan::run(a, cli.tol),
        Command::Witness(a) => witness::run(a),
    };
    let status = match result {
        Ok(status) => status,
        Err(f) => {
            eprintln!("error: {}", f.message);
            if f.status != Status::Usage {
                let _ = print_json(&ErrorJson { error: &f.message, exit_code: f.status as u8 });
            }
            f.status
        }
    };
    ExitCode::from(status as u8)
}
