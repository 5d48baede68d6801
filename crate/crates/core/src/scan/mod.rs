//! Corpus scans: run checks over generated or ingested graphs and
//! aggregate violations, equality cases, and the tightest instances.
//!
//! Partial results form a commutative monoid (counts add, record lists are
//! unioned and cut to a deterministic prefix), so the final [`ScanResult`]
//! is the same for any worker count.

mod checks;
mod corpus;
pub mod oracle;

use std::cmp::Ordering;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

pub use checks::{evaluate, AlphaSpec, CheckKind, Evaluation, Grid, LimitSettings, Outcome};
pub use corpus::{
    enumerate_labeled, item_seed, parse_graph6_lines, splitmix64, CorpusSource, CorpusSpec, Filter, EXHAUSTIVE_MAX_N,
    EXHAUSTIVE_OVERRIDE_MAX_N,
};

use crate::bounds::{BoundReport, GraphFacts};
use crate::graph::emit_graph6;
use crate::par::{fold_range, Jobs};
use crate::stability::SearchMode;
use crate::tol::Tolerances;
use corpus::Corpus;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScanError {
    #[error("exhaustive enumeration supports 1 <= n <= {limit}, got {n}")]
    ExhaustiveOrder { n: usize, limit: usize },
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}:{line}: {message}")]
    Ingest { path: PathBuf, line: usize, message: String },
    #[error("invalid corpus: {0}")]
    Corpus(String),
    #[error("no checks configured")]
    NoChecks,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub checks: Vec<CheckKind>,
    pub grid: Grid,
    pub tol: Tolerances,
    pub top_k: usize,
    /// Cap on listed equality cases; the total is always counted.
    pub max_equalities: usize,
    pub stability_mode: SearchMode,
    pub limit: LimitSettings,
    pub jobs: Jobs,
}

impl ScanConfig {
    pub fn new(checks: Vec<CheckKind>) -> Self {
        ScanConfig {
            checks,
            grid: Grid::default(),
            tol: Tolerances::default(),
            top_k: 10,
            max_equalities: 1000,
            stability_mode: SearchMode::Exhaustive,
            limit: LimitSettings::default(),
            jobs: Jobs::Auto,
        }
    }
}

/// One reported instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub graph6: String,
    pub check: String,
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

impl Record {
    fn new(graph6: &str, check: &str, report: &BoundReport) -> Self {
        Record {
            graph6: graph6.to_string(),
            check: check.to_string(),
            params: report.params.to_string(),
            lhs: report.lhs,
            rhs: report.rhs,
            slack: report.slack,
        }
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        (&self.graph6, &self.check, &self.params).cmp(&(&other.graph6, &other.check, &other.params))
    }

    fn tightness_cmp(&self, other: &Self) -> Ordering {
        self.slack.max(0.0).total_cmp(&other.slack.max(0.0)).then_with(|| self.key_cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorRecord {
    pub graph6: String,
    pub check: String,
    pub params: String,
    pub message: String,
}

/// Keeps the `cap` smallest records under `cmp`.
fn keep_smallest(list: &mut Vec<Record>, cap: usize, cmp: fn(&Record, &Record) -> Ordering) {
    list.sort_by(cmp);
    list.truncate(cap);
}

/// The `k` smallest-slack records, ties broken by graph6, check, params.
pub fn tightness_rank(records: impl IntoIterator<Item = Record>, k: usize) -> Vec<Record> {
    let mut all: Vec<Record> = records.into_iter().filter(|r| r.slack.is_finite()).collect();
    keep_smallest(&mut all, k, Record::tightness_cmp);
    all
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanResult {
    pub graphs_checked: u64,
    pub filtered_out: u64,
    pub evaluations: u64,
    pub violations: Vec<Record>,
    /// Failures of open statements.
    pub discoveries: Vec<Record>,
    pub equality_count: u64,
    pub equalities: Vec<Record>,
    /// Smallest nonnegative slacks; walk-limit evaluations are not ranked.
    pub tightest: Vec<Record>,
    pub out_of_domain: u64,
    pub vacuous: u64,
    pub inconclusive: u64,
    /// `theorem3` premise held with `r ≥ ω` and the conclusion failed.
    pub gated_failures: u64,
    pub errors: Vec<ErrorRecord>,
    pub timing_s: Option<f64>,
}

impl ScanResult {
    fn empty() -> Self {
        ScanResult {
            graphs_checked: 0,
            filtered_out: 0,
            evaluations: 0,
            violations: Vec::new(),
            discoveries: Vec::new(),
            equality_count: 0,
            equalities: Vec::new(),
            tightest: Vec::new(),
            out_of_domain: 0,
            vacuous: 0,
            inconclusive: 0,
            gated_failures: 0,
            errors: Vec::new(),
            timing_s: None,
        }
    }

    fn merge(mut self, other: Self, config: &ScanConfig) -> Self {
        self.graphs_checked += other.graphs_checked;
        self.filtered_out += other.filtered_out;
        self.evaluations += other.evaluations;
        self.violations.extend(other.violations);
        self.discoveries.extend(other.discoveries);
        self.equality_count += other.equality_count;
        self.equalities.extend(other.equalities);
        keep_smallest(&mut self.equalities, config.max_equalities, Record::key_cmp);
        self.tightest.extend(other.tightest);
        keep_smallest(&mut self.tightest, config.top_k, Record::tightness_cmp);
        self.out_of_domain += other.out_of_domain;
        self.vacuous += other.vacuous;
        self.inconclusive += other.inconclusive;
        self.gated_failures += other.gated_failures;
        self.errors.extend(other.errors);
        self
    }

    fn finish(mut self, config: &ScanConfig) -> Self {
        self.violations.sort_by(Record::key_cmp);
        self.discoveries.sort_by(Record::key_cmp);
        keep_smallest(&mut self.equalities, config.max_equalities, Record::key_cmp);
        keep_smallest(&mut self.tightest, config.top_k, Record::tightness_cmp);
        self.errors.sort_by(|a, b| (&a.graph6, &a.check, &a.params).cmp(&(&b.graph6, &b.check, &b.params)));
        self
    }

    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }

    pub fn has_discoveries(&self) -> bool {
        !self.discoveries.is_empty()
    }

    /// One CSV row per listed instance: `kind,graph6,check,params,lhs,rhs,slack`.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["kind", "graph6", "check", "params", "lhs", "rhs", "slack"])?;
        let sections: [(&str, &Vec<Record>); 4] = [
            ("violation", &self.violations),
            ("discovery", &self.discoveries),
            ("equality", &self.equalities),
            ("tightest", &self.tightest),
        ];
        for (kind, records) in sections {
            for r in records {
                w.write_record([
                    kind,
                    &r.graph6,
                    &r.check,
                    &r.params,
                    &r.lhs.to_string(),
                    &r.rhs.to_string(),
                    &r.slack.to_string(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

fn scan_one(acc: &mut ScanResult, graph: &crate::graph::Graph, spec: &CorpusSpec, config: &ScanConfig) {
    if !spec.filters.iter().all(|f| f.accepts(graph)) {
        acc.filtered_out += 1;
        return;
    }
    acc.graphs_checked += 1;
    let facts = GraphFacts::with_tolerances(graph, config.tol);
    let mut g6: Option<String> = None;
    for &kind in &config.checks {
        checks::evaluate(&facts, kind, &config.grid, config.stability_mode, config.limit, |ev| {
            acc.evaluations += 1;
            let g6 = g6.get_or_insert_with(|| emit_graph6(graph));
            match ev.outcome {
                Outcome::Report(report) => {
                    let rec = Record::new(g6, kind.name(), &report);
                    if report.structure_agrees == Some(false) {
                        acc.violations.push(Record::new(g6, "polyn-iff", &report));
                    }
                    if !report.holds {
                        if kind.is_open() {
                            acc.discoveries.push(rec);
                        } else {
                            acc.violations.push(rec);
                        }
                        return;
                    }
                    if report.equality {
                        acc.equality_count += 1;
                        acc.equalities.push(rec.clone());
                        if acc.equalities.len() > 2 * config.max_equalities {
                            keep_smallest(&mut acc.equalities, config.max_equalities, Record::key_cmp);
                        }
                    }
                    // convergence error, not an inequality slack
                    if kind == CheckKind::WalkLimit {
                        return;
                    }
                    acc.tightest.push(rec);
                    if acc.tightest.len() > 2 * config.top_k.max(8) {
                        keep_smallest(&mut acc.tightest, config.top_k, Record::tightness_cmp);
                    }
                }
                Outcome::OutOfDomain => acc.out_of_domain += 1,
                Outcome::Vacuous => acc.vacuous += 1,
                Outcome::Inconclusive => acc.inconclusive += 1,
                Outcome::GatedFailure(_) => {
                    acc.out_of_domain += 1;
                    acc.gated_failures += 1;
                }
                Outcome::Error(message) | Outcome::InvalidParam(message) => acc.errors.push(ErrorRecord {
                    graph6: g6.clone(),
                    check: kind.name().to_string(),
                    params: ev.params.to_string(),
                    message,
                }),
            }
        });
    }
}

/// Runs every configured check over every graph passing the filters.
pub fn scan(spec: &CorpusSpec, config: &ScanConfig) -> Result<ScanResult, ScanError> {
    if config.checks.is_empty() {
        return Err(ScanError::NoChecks);
    }
    let start = Instant::now();
    let corpus = Corpus::open(spec)?;
    let result = fold_range(
        corpus.len(),
        config.jobs,
        ScanResult::empty,
        |mut acc, i| {
            scan_one(&mut acc, &corpus.get(i), spec, config);
            acc
        },
        |a, b| a.merge(b, config),
    );
    let mut result = result.finish(config);
    result.timing_s = Some(start.elapsed().as_secs_f64());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, turan_graph};

    fn exhaustive(n: usize) -> CorpusSpec {
        CorpusSpec::new(CorpusSource::Exhaustive { n, allow_n8: false })
    }

    #[test]
    fn theorem1_on_five_vertices() {
        let mut config = ScanConfig::new(vec![CheckKind::Theorem1]);
        config.grid.r = Some(vec![2, 3]);
        let result = scan(&exhaustive(5), &config).unwrap();
        assert_eq!(result.graphs_checked, 1024);
        assert_eq!(result.evaluations, 2048);
        assert!(result.violations.is_empty());
        assert!(result.errors.is_empty());
    }

    #[test]
    fn exhaustive_order_limits() {
        let config = ScanConfig::new(vec![CheckKind::Wilf]);
        assert!(matches!(scan(&exhaustive(8), &config), Err(ScanError::ExhaustiveOrder { n: 8, limit: 7 })));
        assert!(scan(&exhaustive(1), &config).is_ok());
        assert_eq!(scan(&exhaustive(3), &ScanConfig::new(vec![])), Err(ScanError::NoChecks));
    }

    #[test]
    fn kfree_filter_is_sound() {
        let spec = exhaustive(5).with_filter(Filter::KFree(3));
        let config = ScanConfig::new(vec![CheckKind::Conjecture]);
        let result = scan(&spec, &config).unwrap();
        assert!(result.filtered_out > 0);
        for rec in result.equalities.iter().chain(&result.tightest) {
            let g = crate::graph::parse_graph6(&rec.graph6).unwrap();
            assert_eq!(crate::cliques::clique_counts(&g).k(3), 0);
        }
    }

    #[test]
    fn tightness_examples() {
        let turan = vec![turan_graph(2, 4).unwrap(), turan_graph(2, 6).unwrap(), cycle(5).unwrap()];
        let mut config = ScanConfig::new(vec![CheckKind::Conjecture]);
        config.grid.r = Some(vec![2]);
        let result = scan(&CorpusSpec::new(CorpusSource::Graphs(turan)), &config).unwrap();
        assert_eq!(result.equality_count, 2);

        let complete: Vec<_> = (2..=6).map(|n| complete_graph(n).unwrap()).collect();
        let result =
            scan(&CorpusSpec::new(CorpusSource::Graphs(complete)), &ScanConfig::new(vec![CheckKind::Wilf])).unwrap();
        assert_eq!(result.equality_count, 5);
        assert!(result.tightest.iter().all(|r| r.slack.abs() < 1e-9));
    }

    #[test]
    fn rank_breaks_ties_by_graph6() {
        let rec = |g6: &str, slack: f64| Record {
            graph6: g6.into(),
            check: "x".into(),
            params: String::new(),
            lhs: 0.0,
            rhs: slack,
            slack,
        };
        let top = tightness_rank([rec("C~", 0.0), rec("Bw", 0.5), rec("A_", 0.0), rec("D??", -1e-12)], 3);
        let names: Vec<_> = top.iter().map(|r| r.graph6.as_str()).collect();
        assert_eq!(names, ["A_", "C~", "D??"]);
    }

    #[test]
    fn csv_has_one_row_per_record() {
        let config = ScanConfig::new(vec![CheckKind::TuranEdge]);
        let result = scan(&exhaustive(3), &config).unwrap();
        let mut out = Vec::new();
        result.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 1 + result.equalities.len() + result.tightest.len());
    }
}
