use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;

use scl_core::cliques::clique_counts;
use scl_core::graph::parse_graph6_with_cap;
use scl_core::scan::{scan, CheckKind, CorpusSource, CorpusSpec, Filter, Record, ScanConfig, ScanError};
use scl_core::spectral::spectrum;

use crate::args::{Format, ScanArgs};
use crate::{
    build_grid, jobs, limit_settings, print_json, search_mode, tolerances, vertex_cap, CmdResult, Failure, Status,
};

fn source(a: &ScanArgs) -> Result<CorpusSource, Failure> {
    let given = [a.exhaustive_n.is_some(), a.file.is_some(), a.random_n.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(Failure::usage("give exactly one of --exhaustive-n, --file, --random-n"));
    }
    Ok(if let Some(n) = a.exhaustive_n {
        CorpusSource::Exhaustive { n, allow_n8: a.allow_n8 }
    } else if let Some(path) = &a.file {
        CorpusSource::Graph6File(path.clone())
    } else {
        CorpusSource::Random { n: a.random_n.unwrap_or(0), p: a.p, count: a.count, seed: a.seed }
    })
}

fn filter(text: &str, default_k: usize) -> Result<Filter, Failure> {
    match text.trim() {
        "connected" => Ok(Filter::Connected),
        "nonbipartite" | "non-bipartite" => Ok(Filter::NonBipartite),
        "kfree" => Ok(Filter::KFree(default_k)),
        other => match other.strip_prefix("kfree=").map(|k| k.parse::<usize>()) {
            Some(Ok(k)) if k >= 2 => Ok(Filter::KFree(k)),
            _ => Err(Failure::usage(format!("unknown filter `{other}`"))),
        },
    }
}

fn scan_failure(e: ScanError) -> Failure {
    match e {
        ScanError::Io { .. } | ScanError::Ingest { .. } => Failure::io(e),
        _ => Failure::usage(e),
    }
}

#[derive(Serialize)]
struct Artifact<'a> {
    kind: &'a str,
    record: &'a Record,
    n: usize,
    m: usize,
    eigenvalues: Vec<f64>,
    clique_counts: Vec<String>,
}

fn write_artifacts(dir: &Path, kind: &str, records: &[Record], cap: usize) -> io::Result<usize> {
    if records.is_empty() {
        return Ok(0);
    }
    fs::create_dir_all(dir)?;
    for (i, rec) in records.iter().enumerate() {
        let g = parse_graph6_with_cap(&rec.graph6, cap).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        let artifact = Artifact {
            kind,
            record: rec,
            n: g.n(),
            m: g.m(),
            eigenvalues: spectrum(&g).map(|s| s.eigenvalues().to_vec()).unwrap_or_default(),
            clique_counts: clique_counts(&g).counts().iter().map(|c| c.to_string()).collect(),
        };
        let stem = dir.join(format!("{kind}-{}-{i:04}", rec.check));
        let json = serde_json::to_string_pretty(&artifact).map_err(io::Error::other)?;
        fs::write(stem.with_extension("json"), json + "\n")?;
        fs::write(stem.with_extension("g6"), format!("{}\n", rec.graph6))?;
    }
    Ok(records.len())
}

pub fn run(a: &ScanArgs, tol_factor: f64) -> CmdResult {
    let cap = vertex_cap()?;
    let grid = build_grid(&a.grid);
    let checks: Vec<CheckKind> = if a.grid.checks.is_empty() {
        CheckKind::THEOREMS.to_vec()
    } else {
        a.grid.checks.iter().flat_map(|c| c.0.iter().copied()).collect()
    };
    let default_k = grid.r.as_ref().and_then(|r| r.iter().max().copied()).unwrap_or(3) + 1;
    let mut spec = CorpusSpec::new(source(a)?);
    spec.max_n = cap;
    for f in &a.filter {
        spec.filters.push(filter(f, default_k)?);
    }
    if a.top_k == 0 {
        return Err(Failure::usage("--top-k must be at least 1"));
    }

    let mut config = ScanConfig::new(checks);
    config.grid = grid;
    config.tol = tolerances(tol_factor)?;
    config.top_k = a.top_k;
    config.max_equalities = a.max_records;
    config.stability_mode = search_mode(a.grid.mode);
    config.limit = limit_settings(&a.grid, tol_factor);
    config.jobs = jobs(a.jobs);

    let mut result = scan(&spec, &config).map_err(scan_failure)?;
    let elapsed = result.timing_s.take();
    if a.timing {
        result.timing_s = elapsed;
    }

    eprintln!(
        "checked {} graph(s) ({} filtered out), {} evaluation(s): {} violation(s), {} discovery(ies), {} equality case(s), {} out of domain, {} error(s)",
        result.graphs_checked,
        result.filtered_out,
        result.evaluations,
        result.violations.len(),
        result.discoveries.len(),
        result.equality_count,
        result.out_of_domain,
        result.errors.len()
    );
    let written = write_artifacts(&a.artifact_dir, "violation", &result.violations, cap)
        .and_then(|v| Ok(v + write_artifacts(&a.artifact_dir, "discovery", &result.discoveries, cap)?))
        .map_err(|e| Failure::io(format!("{}: {e}", a.artifact_dir.display())))?;
    if written > 0 {
        eprintln!("wrote {written} reproducer(s) to {}", a.artifact_dir.display());
    }
    for rec in result.violations.iter().chain(&result.discoveries) {
        eprintln!(
            "  {} [{}] {}: lhs {} rhs {} slack {}",
            rec.check, rec.params, rec.graph6, rec.lhs, rec.rhs, rec.slack
        );
    }

    match a.format {
        Format::Json => print_json(&result)?,
        Format::Csv => result.write_csv(io::stdout().lock()).map_err(|e| Failure::io(format!("stdout: {e}")))?,
    }
    Ok(if result.has_violations() {
        Status::Violation
    } else if result.has_discoveries() {
        Status::Discovery
    } else {
        Status::Ok
    })
}
