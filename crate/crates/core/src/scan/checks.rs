use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{
    conjecture_check, edge_corollary_check, momo_reports, oldin_check, polyn_bound, theorem1_bound, theorem2_lower,
    theorem3_conditional, turan_edge_bound, walk_power_bound, wilf_bound, BoundReport, CheckError, GraphFacts, Params,
};
use crate::exact::Alpha;
use crate::par::Jobs;
use crate::spectral::{walk_ratio_limit_check, SpectralError};
use crate::stability::{stability_report, SearchMode, Verdict};

/// A named check in a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Wilf,
    Maxmu,
    TuranEdge,
    Polyn,
    Theorem1,
    Theorem2,
    Theorem3,
    Momo,
    Oldin,
    Conjecture,
    EdgeCorollary,
    Stability,
    WalkLimit,
}

impl CheckKind {
    pub const ALL: [CheckKind; 13] = [
        CheckKind::Wilf,
        CheckKind::Maxmu,
        CheckKind::TuranEdge,
        CheckKind::Polyn,
        CheckKind::Theorem1,
        CheckKind::Theorem2,
        CheckKind::Theorem3,
        CheckKind::Momo,
        CheckKind::Oldin,
        CheckKind::Conjecture,
        CheckKind::EdgeCorollary,
        CheckKind::Stability,
        CheckKind::WalkLimit,
    ];

    /// The proven inequalities; a failure of any of these is a violation.
    pub const THEOREMS: [CheckKind; 8] = [
        CheckKind::Wilf,
        CheckKind::Maxmu,
        CheckKind::TuranEdge,
        CheckKind::Polyn,
        CheckKind::Theorem1,
        CheckKind::Theorem2,
        CheckKind::Momo,
        CheckKind::Oldin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Wilf => "wilf",
            CheckKind::Maxmu => "maxmu",
            CheckKind::TuranEdge => "turan-edge",
            CheckKind::Polyn => "polyn",
            CheckKind::Theorem1 => "theorem1",
            CheckKind::Theorem2 => "theorem2",
            CheckKind::Theorem3 => "theorem3",
            CheckKind::Momo => "momo",
            CheckKind::Oldin => "oldin",
            CheckKind::Conjecture => "conjecture",
            CheckKind::EdgeCorollary => "edge-corollary",
            CheckKind::Stability => "stability",
            CheckKind::WalkLimit => "walk-limit",
        }
    }

    /// Open statements: failures are discoveries, not violations.
    pub fn is_open(self) -> bool {
        self == CheckKind::Conjecture
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        let kind = match key.as_str() {
            "walk-power" | "walk_power" => CheckKind::Maxmu,
            "maxmu1" | "turan_edge" | "turan" => CheckKind::TuranEdge,
            "le3mu" => CheckKind::Theorem1,
            "tmomo" => CheckKind::Theorem2,
            "lensmm" | "theorem3_conditional" => CheckKind::Theorem3,
            "moon-moser" | "moon_moser" => CheckKind::Momo,
            "edge_corollary" => CheckKind::EdgeCorollary,
            "tstab" | "witness" => CheckKind::Stability,
            "walk_limit" | "ratio-limit" => CheckKind::WalkLimit,
            other => {
                *CheckKind::ALL.iter().find(|k| k.name() == other).ok_or_else(|| format!("unknown check `{s}`"))?
            }
        };
        Ok(kind)
    }
}

/// α grid entry; `StabilityMax` resolves to `2⁻¹⁰r⁻⁶` per `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaSpec {
    Value(Alpha),
    StabilityMax,
}

impl AlphaSpec {
    pub fn resolve(&self, r: usize) -> Alpha {
        match self {
            AlphaSpec::Value(a) => a.clone(),
            AlphaSpec::StabilityMax => Alpha::stability_max(r),
        }
    }
}

impl FromStr for AlphaSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "max" {
            return Ok(AlphaSpec::StabilityMax);
        }
        s.parse::<Alpha>().map(AlphaSpec::Value).map_err(|e| e.to_string())
    }
}

/// Parameter grids; `None` selects each check's default.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Grid {
    pub r: Option<Vec<usize>>,
    pub s: Option<Vec<usize>>,
    pub l: Option<Vec<usize>>,
    pub q: Option<Vec<usize>>,
    pub alpha: Option<Vec<AlphaSpec>>,
}

impl Grid {
    fn r_for(&self, kind: CheckKind) -> Vec<usize> {
        self.r.clone().unwrap_or_else(|| match kind {
            CheckKind::Theorem1 => vec![2, 3, 4],
            _ => vec![2, 3],
        })
    }

    fn alpha_for(&self, kind: CheckKind) -> Vec<AlphaSpec> {
        self.alpha.clone().unwrap_or_else(|| match kind {
            CheckKind::Theorem3 => [Alpha::zero(), Alpha::ratio(1, 20), Alpha::ratio(1, 10), Alpha::ratio(1, 4)]
                .into_iter()
                .map(AlphaSpec::Value)
                .collect(),
            CheckKind::Stability => vec![AlphaSpec::StabilityMax],
            _ => vec![AlphaSpec::Value(Alpha::zero())],
        })
    }
}

/// Walk-ratio limit settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitSettings {
    pub tol: f64,
    pub max_length: usize,
}

impl Default for LimitSettings {
    fn default() -> Self {
        LimitSettings { tol: 1e-6, max_length: 5000 }
    }
}

/// Result of one (check, params) evaluation on one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Report(BoundReport),
    /// Hypotheses of the statement do not apply.
    OutOfDomain,
    /// Premise false; the implication holds vacuously.
    Vacuous,
    /// In-domain evaluation that neither certifies nor refutes (heuristic miss).
    Inconclusive,
    /// `theorem3` premise held outside `r < ω` and the conclusion failed.
    GatedFailure(BoundReport),
    /// Parameters outside the statement's range, e.g. `s < 2` for oldin.
    InvalidParam(String),
    Error(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub params: Params,
    pub outcome: Outcome,
}

fn from_result(r: Result<BoundReport, CheckError>) -> Outcome {
    match r {
        Ok(report) => Outcome::Report(report),
        Err(CheckError::OutOfDomain(_)) => Outcome::OutOfDomain,
        Err(CheckError::Param(msg)) => Outcome::InvalidParam(msg),
        Err(e) => Outcome::Error(e.to_string()),
    }
}

/// Evaluates `kind` over its parameter grid, passing each result to `sink`.
pub fn evaluate<F: FnMut(Evaluation)>(
    f: &GraphFacts,
    kind: CheckKind,
    grid: &Grid,
    stability_mode: SearchMode,
    limit: LimitSettings,
    mut sink: F,
) {
    let mut emit = |params: Params, outcome: Outcome| sink(Evaluation { params, outcome });
    match kind {
        CheckKind::Wilf => emit(Params::default(), from_result(wilf_bound(f))),
        CheckKind::Maxmu => {
            for s in grid.s.clone().unwrap_or_else(|| vec![1, 2, 3, 4]) {
                let params = Params { s: Some(s), ..Default::default() };
                emit(params, from_result(walk_power_bound(f, s)));
            }
        }
        CheckKind::TuranEdge => emit(Params::default(), from_result(turan_edge_bound(f))),
        CheckKind::Polyn => emit(Params::default(), from_result(polyn_bound(f))),
        CheckKind::Theorem1 => {
            for r in grid.r_for(kind) {
                emit(Params::r(r), from_result(theorem1_bound(f, r)));
            }
        }
        CheckKind::Theorem2 => {
            for r in grid.r_for(kind) {
                emit(Params::r(r), from_result(theorem2_lower(f, r)));
            }
        }
        CheckKind::Theorem3 => {
            for r in grid.r_for(kind) {
                let s_values = grid.s.clone().unwrap_or_else(|| (1..=r).collect());
                for s in s_values.into_iter().filter(|&s| s >= 1 && s <= r) {
                    for spec in grid.alpha_for(kind) {
                        let alpha = spec.resolve(r);
                        let params =
                            Params { r: Some(r), s: Some(s), alpha: Some(alpha.clone()), ..Default::default() };
                        let outcome = match theorem3_conditional(f, r, s, &alpha) {
                            Err(e) => from_result(Err(e)),
                            Ok(rep) if !rep.in_domain && rep.fails_outside_domain => {
                                Outcome::GatedFailure(rep.conclusion)
                            }
                            Ok(rep) if !rep.in_domain => Outcome::OutOfDomain,
                            Ok(rep) if !rep.premise => Outcome::Vacuous,
                            Ok(rep) => Outcome::Report(rep.conclusion),
                        };
                        emit(params, outcome);
                    }
                }
            }
        }
        CheckKind::Momo => {
            let (_, pairs) = momo_reports(f);
            for report in pairs {
                emit(report.params.clone(), Outcome::Report(report));
            }
        }
        CheckKind::Oldin => {
            let omega = f.omega();
            let s_values = grid.s.clone().unwrap_or_else(|| (2..=omega).collect());
            for s in s_values {
                for l in grid.l.clone().unwrap_or_else(|| vec![2, 3]) {
                    let params = Params { s: Some(s), l: Some(l), ..Default::default() };
                    emit(params, from_result(oldin_check(f, s, l)));
                }
            }
        }
        CheckKind::Conjecture => {
            for r in grid.r_for(kind) {
                emit(Params::r(r), from_result(conjecture_check(f, r)));
            }
        }
        CheckKind::EdgeCorollary => {
            for r in grid.r_for(kind) {
                for spec in grid.alpha_for(kind) {
                    let alpha = spec.resolve(r);
                    let params = Params { r: Some(r), alpha: Some(alpha.clone()), ..Default::default() };
                    emit(params, from_result(edge_corollary_check(f, r, &alpha)));
                }
            }
        }
        CheckKind::Stability => {
            for r in grid.r_for(kind) {
                for spec in grid.alpha_for(kind) {
                    let alpha = spec.resolve(r);
                    let params = Params { r: Some(r), alpha: Some(alpha.clone()), ..Default::default() };
                    let outcome = match stability_report(f.graph(), r, &alpha, stability_mode, Jobs::Fixed(1)) {
                        Err(e) => Outcome::Error(e.to_string()),
                        Ok(rep) => {
                            let order = rep.witness.as_ref().map_or(0, |w| w.order);
                            let mut report = BoundReport::from_floats(
                                "stability",
                                params.clone(),
                                rep.thresholds.order_min,
                                order as f64,
                                f.tolerances(),
                            );
                            match rep.verdict {
                                Verdict::PremiseFailed => Outcome::OutOfDomain,
                                Verdict::HeuristicMiss => Outcome::Inconclusive,
                                Verdict::Witnessed => {
                                    report.holds = true;
                                    report.equality = false;
                                    Outcome::Report(report)
                                }
                                Verdict::ExhaustiveMiss => {
                                    report.holds = false;
                                    Outcome::Report(report)
                                }
                            }
                        }
                    };
                    emit(params, outcome);
                }
            }
        }
        CheckKind::WalkLimit => {
            for q in grid.q.clone().unwrap_or_else(|| vec![0, 1, 2]) {
                let params = Params { q: Some(q), ..Default::default() };
                let outcome = match walk_ratio_limit_check(f.graph(), q, limit.tol, limit.max_length) {
                    Err(SpectralError::LimitNotApplicable) => Outcome::OutOfDomain,
                    Err(e) => Outcome::Error(e.to_string()),
                    Ok(conv) => {
                        let allowed = limit.tol * conv.target.max(1.0);
                        let mut report =
                            BoundReport::from_floats("walk-limit", params.clone(), conv.error, allowed, f.tolerances());
                        report.holds = conv.converged;
                        report.equality = false;
                        Outcome::Report(report)
                    }
                };
                emit(params, outcome);
            }
        }
    }
}
