use serde::Serialize;

use scl_core::graph::emit_graph6;
use scl_core::stability::{stability_report, verify_witness, StabilityError, StabilityReport, Verdict};

use crate::args::WitnessArgs;
use crate::{jobs, load_graphs, print_json, search_mode, CmdResult, Failure, Status};

#[derive(Serialize)]
struct Entry {
    graph6: String,
    #[serde(flatten)]
    report: StabilityReport,
    /// Independent recheck of the witness; absent when there is none.
    verified: Option<bool>,
}

#[derive(Serialize)]
struct WitnessOutput {
    reports: Vec<Entry>,
}

pub fn run(a: &WitnessArgs) -> CmdResult {
    let graphs = load_graphs(&a.input)?;
    let alpha = a.alpha.resolve(a.r);
    let mode = search_mode(a.mode);
    let mut reports = Vec::new();
    let mut status = Status::Ok;
    for g in &graphs {
        let g6 = emit_graph6(g);
        let report = stability_report(g, a.r, &alpha, mode, jobs(a.jobs)).map_err(|e| match e {
            StabilityError::TooLarge(_) | StabilityError::BadR(_) => Failure::usage(format!("{g6}: {e}")),
            other => Failure::io(format!("{g6}: {other}")),
        })?;
        let verified = match &report.witness {
            Some(w) => Some(verify_witness(g, a.r, &alpha, w).map_err(|e| Failure::io(format!("{g6}: {e}")))?),
            None => None,
        };
        eprintln!(
            "{g6}: premise {}, verdict {:?}, order >= {:.4}, min degree >= {:.4}",
            if report.premise_ok { "holds" } else { "fails" },
            report.verdict,
            report.thresholds.order_min,
            report.thresholds.degree_min
        );
        if report.verdict == Verdict::ExhaustiveMiss || verified == Some(false) {
            status = Status::Violation;
        }
        reports.push(Entry { graph6: g6, report, verified });
    }
    print_json(&WitnessOutput { reports })?;
    Ok(status)
}
