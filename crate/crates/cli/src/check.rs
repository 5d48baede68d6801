use serde::Serialize;

use scl_core::bounds::{BoundReport, GraphFacts, Params};
use scl_core::graph::emit_graph6;
use scl_core::scan::{evaluate, CheckKind, Outcome};

use crate::args::CheckArgs;
use crate::{build_grid, limit_settings, load_graphs, print_json, search_mode, tolerances, CmdResult, Status};

#[derive(Serialize)]
pub struct Entry {
    graph6: String,
    check: &'static str,
    params: Params,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
}

#[derive(Serialize, Default)]
struct Summary {
    evaluations: usize,
    holds: usize,
    violations: usize,
    discoveries: usize,
    out_of_domain: usize,
    vacuous: usize,
    inconclusive: usize,
    gated_failures: usize,
    errors: usize,
}

#[derive(Serialize)]
struct CheckOutput {
    results: Vec<Entry>,
    summary: Summary,
}

/// Outcome label used in the JSON output.
fn classify(kind: CheckKind, outcome: &Outcome) -> &'static str {
    match outcome {
        Outcome::Report(r) if r.structure_agrees == Some(false) => "violated",
        Outcome::Report(r) if r.holds => "holds",
        Outcome::Report(_) if kind.is_open() => "discovery",
        Outcome::Report(_) => "violated",
        Outcome::OutOfDomain => "out-of-domain",
        Outcome::Vacuous => "vacuous",
        Outcome::Inconclusive => "inconclusive",
        Outcome::GatedFailure(_) => "gated-failure",
        Outcome::InvalidParam(_) => "invalid-param",
        Outcome::Error(_) => "error",
    }
}

pub fn run(a: &CheckArgs, tol_factor: f64) -> CmdResult {
    let graphs = load_graphs(&a.input)?;
    let tol = tolerances(tol_factor)?;
    let grid = build_grid(&a.grid);
    let limit = limit_settings(&a.grid, tol_factor);
    let mode = search_mode(a.grid.mode);
    let kinds: Vec<CheckKind> = if a.grid.checks.is_empty() {
        CheckKind::THEOREMS.to_vec()
    } else {
        a.grid.checks.iter().flat_map(|c| c.0.iter().copied()).collect()
    };

    let mut results = Vec::new();
    let mut summary = Summary::default();
    for g in &graphs {
        let facts = GraphFacts::with_tolerances(g, tol);
        let g6 = emit_graph6(g);
        for &kind in &kinds {
            evaluate(&facts, kind, &grid, mode, limit, |ev| {
                let label = classify(kind, &ev.outcome);
                summary.evaluations += 1;
                match label {
                    "holds" => summary.holds += 1,
                    "violated" => summary.violations += 1,
                    "discovery" => summary.discoveries += 1,
                    "out-of-domain" => summary.out_of_domain += 1,
                    "vacuous" => summary.vacuous += 1,
                    "inconclusive" => summary.inconclusive += 1,
                    "gated-failure" => summary.gated_failures += 1,
                    _ => summary.errors += 1,
                }
                let (report, message) = match ev.outcome {
                    Outcome::Report(r) | Outcome::GatedFailure(r) => (Some(r), None),
                    Outcome::InvalidParam(m) | Outcome::Error(m) => (None, Some(m)),
                    _ => (None, None),
                };
                results.push(Entry {
                    graph6: g6.clone(),
                    check: kind.name(),
                    params: ev.params,
                    outcome: label,
                    report,
                    message,
                });
            });
        }
    }

    let invalid = results.iter().filter(|e| e.outcome == "invalid-param").count();
    eprintln!(
        "{} graph(s), {} evaluation(s): {} hold, {} violated, {} discoveries, {} out of domain",
        graphs.len(),
        summary.evaluations,
        summary.holds,
        summary.violations,
        summary.discoveries,
        summary.out_of_domain
    );
    for e in results.iter().filter(|e| matches!(e.outcome, "violated" | "discovery" | "invalid-param" | "error")) {
        eprintln!("  {} {} [{}]: {}", e.outcome, e.check, e.graph6, e.message.as_deref().unwrap_or(""));
    }
    let status = if invalid > 0 {
        Status::Usage
    } else if summary.violations > 0 {
        Status::Violation
    } else if summary.discoveries > 0 {
        Status::Discovery
    } else {
        Status::Ok
    };
    print_json(&CheckOutput { results, summary })?;
    Ok(status)
}
