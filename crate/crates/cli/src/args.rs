use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use scl_core::scan::{AlphaSpec, CheckKind};

#[derive(Debug, Parser)]
#[command(name = "scl", version, about = "Spectral clique inequality checker")]
pub struct Cli {
    /// Multiply every numeric tolerance by this factor.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate graphs as graph6.
    Gen(GenArgs),
    /// Evaluate checks on individual graphs.
    Check(CheckArgs),
    /// Run checks over a corpus.
    Scan(ScanArgs),
    /// Search for an induced r-partite stability witness.
    Witness(WitnessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Turan,
    Multipartite,
    Random,
    Named,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Class sizes, e.g. `2,3,1`.
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub isolated: usize,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// complete, cycle, path, star, empty, petersen.
    #[arg(long)]
    pub name: Option<String>,
    /// Write one graph6 line per graph to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Graphs given inline or from a graph6 file (`-` for stdin).
#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long = "g6")]
    pub g6: Vec<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Integer grid such as `2..4`, `2,3,5` or `1..3,6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsizeList(pub Vec<usize>);

impl FromStr for UsizeList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid integer `{t}`"));
            if let Some((a, b)) = item.split_once("..") {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range `{item}`"));
                }
                out.extend(a..=b);
            } else {
                out.push(num(item)?);
            }
        }
        if out.is_empty() {
            return Err("empty list".into());
        }
        Ok(UsizeList(out))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaList(pub Vec<AlphaSpec>);

impl FromStr for AlphaList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let items: Result<Vec<_>, _> =
            s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(AlphaSpec::from_str).collect();
        let items = items?;
        if items.is_empty() {
            return Err("empty list".into());
        }
        Ok(AlphaList(items))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckList(pub Vec<CheckKind>);

impl FromStr for CheckList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match item {
                "all" => out.extend(CheckKind::ALL),
                "theorems" => out.extend(CheckKind::THEOREMS),
                other => out.push(other.parse()?),
            }
        }
        Ok(CheckList(out))
    }
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Checks to run (comma list; `all`, `theorems`). Defaults to the proven inequalities.
    #[arg(long = "check", alias = "theorem")]
    pub checks: Vec<CheckList>,
    #[arg(long)]
    pub r: Vec<UsizeList>,
    #[arg(long)]
    pub s: Vec<UsizeList>,
    #[arg(long)]
    pub l: Vec<UsizeList>,
    #[arg(long)]
    pub q: Vec<UsizeList>,
    /// Decimal, scientific, `p/q`, or `max` for the largest admissible stability value.
    #[arg(long)]
    pub alpha: Vec<AlphaList>,
    /// Witness search used by the stability check.
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: ModeArg,
    /// Relative tolerance of the walk-ratio limit check.
    #[arg(long, default_value_t = 1e-6)]
    pub limit_tol: f64,
    #[arg(long, default_value_t = 5000)]
    pub max_length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Heuristic,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// All labeled graphs on this many vertices.
    #[arg(long)]
    pub exhaustive_n: Option<usize>,
    /// Permit `--exhaustive-n 8`.
    #[arg(long)]
    pub allow_n8: bool,
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub random_n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 100)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub grid: GridArgs,
    /// connected, nonbipartite, kfree or kfree=K. Bare `kfree` excludes K_{r+1} for the largest r.
    #[arg(long)]
    pub filter: Vec<String>,
    #[arg(long, default_value_t = 10)]
    pub top_k: usize,
    #[arg(long, default_value_t = 1000)]
    pub max_records: usize,
    /// Worker threads; 0 picks automatically.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Report wall-clock time in `timing_s`.
    #[arg(long)]
    pub timing: bool,
    /// Where violation reproducers and discoveries are written.
    #[arg(long, default_value = "scl-artifacts")]
    pub artifact_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value = "max")]
    pub alpha: AlphaSpec,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}
