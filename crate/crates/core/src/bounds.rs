//! Evaluators for the spectral clique inequalities.
//!
//! Every evaluator returns a [`BoundReport`] normalized so that the
//! inequality reads `lhs ≤ rhs` and `slack = rhs − lhs`. Clique and walk
//! quantities are exact; powers of `μ` are floating point. Reports whose
//! slack lands inside `(−ε, ε)` are recomputed from a spectrum solved with
//! 100× tighter solver tolerances before they are classified.

use std::cell::{OnceCell, RefCell};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::cliques::{
    clique_counts, is_complete_multipartite_plus_isolated, moon_moser_ratios, vertex_clique_counts, CliqueProfile,
    MoMoReport, VertexCliqueProfile,
};
use crate::exact::{int, to_f64, Alpha};
use crate::graph::Graph;
use crate::spectral::{spectrum_with, walk_counts, SpectralError, Spectrum, WalkProfile};
use crate::tol::Tolerances;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("integer overflow evaluating {0}")]
    Overflow(&'static str),
}

/// Parameters of one evaluation; unset fields are omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Alpha>,
}

impl Params {
    pub fn r(r: usize) -> Self {
        Params { r: Some(r), ..Default::default() }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, v) in [("r", self.r), ("s", self.s), ("t", self.t), ("l", self.l), ("q", self.q)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(a) = &self.alpha {
            parts.push(format!("alpha={a}"));
        }
        f.write_str(&parts.join(","))
    }
}

/// One inequality evaluation, oriented as `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    pub params: Params,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    pub scale: f64,
    /// Both sides compared in exact arithmetic; `holds`/`equality` carry no tolerance.
    pub exact: bool,
    /// Recomputed with the tightened eigen tolerance.
    pub reverified: bool,
    /// For `polyn`: whether the equality flag agrees with the complete
    /// multipartite recognizer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure_agrees: Option<bool>,
}

impl BoundReport {
    pub fn from_floats(name: &'static str, params: Params, lhs: f64, rhs: f64, tol: &Tolerances) -> Self {
        let slack = rhs - lhs;
        let scale = 1f64.max(lhs.abs()).max(rhs.abs());
        BoundReport {
            name,
            params,
            lhs,
            rhs,
            slack,
            holds: slack >= -tol.holds_rel * scale,
            equality: slack.abs() <= tol.equality_rel * scale,
            scale,
            exact: false,
            reverified: false,
            structure_agrees: None,
        }
    }

    pub fn from_exact(name: &'static str, params: Params, lhs: &BigRational, rhs: &BigRational) -> Self {
        let (l, r) = (to_f64(lhs), to_f64(rhs));
        BoundReport {
            name,
            params,
            lhs: l,
            rhs: r,
            slack: to_f64(&(rhs - lhs)),
            holds: lhs <= rhs,
            equality: lhs == rhs,
            scale: 1f64.max(l.abs()).max(r.abs()),
            exact: true,
            reverified: false,
            structure_agrees: None,
        }
    }

    fn near_boundary(&self, tol: &Tolerances) -> bool {
        !self.exact && self.slack.abs() < tol.holds_rel * self.scale
    }
}

/// Lazily computed spectrum, clique, and walk data for one graph.
pub struct GraphFacts<'g> {
    graph: &'g Graph,
    tol: Tolerances,
    spectrum: OnceCell<Result<Spectrum, SpectralError>>,
    tight_spectrum: OnceCell<Result<Spectrum, SpectralError>>,
    cliques: OnceCell<CliqueProfile>,
    vertex_cliques: OnceCell<VertexCliqueProfile>,
    walks: RefCell<Option<Rc<WalkProfile>>>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_tolerances(graph, Tolerances::default())
    }

    pub fn with_tolerances(graph: &'g Graph, tol: Tolerances) -> Self {
        GraphFacts {
            graph,
            tol,
            spectrum: OnceCell::new(),
            tight_spectrum: OnceCell::new(),
            cliques: OnceCell::new(),
            vertex_cliques: OnceCell::new(),
            walks: RefCell::new(None),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn spectrum(&self) -> Result<&Spectrum, SpectralError> {
        self.spectrum.get_or_init(|| spectrum_with(self.graph, &self.tol)).as_ref().map_err(Clone::clone)
    }

    pub fn tight_spectrum(&self) -> Result<&Spectrum, SpectralError> {
        self.tight_spectrum
            .get_or_init(|| spectrum_with(self.graph, &self.tol.tightened()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn mu(&self) -> Result<f64, SpectralError> {
        self.spectrum().map(Spectrum::radius)
    }

    pub fn cliques(&self) -> &CliqueProfile {
        self.cliques.get_or_init(|| clique_counts(self.graph))
    }

    pub fn vertex_cliques(&self) -> &VertexCliqueProfile {
        self.vertex_cliques.get_or_init(|| vertex_clique_counts(self.graph))
    }

    pub fn omega(&self) -> usize {
        self.cliques().omega()
    }

    /// Walk profile covering at least `length`.
    pub fn walks(&self, length: usize) -> Result<Rc<WalkProfile>, SpectralError> {
        let mut slot = self.walks.borrow_mut();
        if let Some(w) = slot.as_ref().filter(|w| w.max_length() >= length) {
            return Ok(Rc::clone(w));
        }
        let w = Rc::new(walk_counts(self.graph, length.max(4))?);
        *slot = Some(Rc::clone(&w));
        Ok(w)
    }

    /// Evaluates a spectral report, recomputing it against the tightened
    /// spectrum when its slack is within ε of zero.
    fn spectral_report<F>(&self, name: &'static str, params: Params, sides: F) -> Result<BoundReport, CheckError>
    where
        F: Fn(&Spectrum) -> (f64, f64),
    {
        let (lhs, rhs) = sides(self.spectrum()?);
        let report = BoundReport::from_floats(name, params.clone(), lhs, rhs, &self.tol);
        if !report.near_boundary(&self.tol) {
            return Ok(report);
        }
        let (lhs, rhs) = sides(self.tight_spectrum()?);
        let mut report = BoundReport::from_floats(name, params, lhs, rhs, &self.tol);
        report.reverified = true;
        Ok(report)
    }
}

fn omega_fraction(omega: usize) -> f64 {
    (omega as f64 - 1.0) / omega as f64
}

/// `μ ≤ (1 − 1/ω)·n`.
pub fn wilf_bound(f: &GraphFacts) -> Result<BoundReport, CheckError> {
    let frac = omega_fraction(f.omega());
    let n = f.graph().n() as f64;
    f.spectral_report("wilf", Params::default(), |sp| (sp.radius(), frac * n))
}

/// `μ^s ≤ (1 − 1/ω)·w_s`.
pub fn walk_power_bound(f: &GraphFacts, s: usize) -> Result<BoundReport, CheckError> {
    if s == 0 {
        return Err(CheckError::Param("walk power s must be at least 1".into()));
    }
    let ws = f.walks(s)?.total(s) as f64;
    let frac = omega_fraction(f.omega());
    let params = Params { s: Some(s), ..Default::default() };
    f.spectral_report("maxmu", params, |sp| (sp.radius().powi(s as i32), frac * ws))
}

/// `m ≤ (ω − 1)/(2ω)·n²`, exact.
pub fn turan_edge_bound(f: &GraphFacts) -> Result<BoundReport, CheckError> {
    let g = f.graph();
    let omega = f.omega();
    let rhs = BigRational::new(BigInt::from(omega - 1) * BigInt::from(g.n() * g.n()), BigInt::from(2 * omega));
    Ok(BoundReport::from_exact("turan-edge", Params::default(), &int(g.m()), &rhs))
}

/// `μ^ω ≤ Σ_{s=2}^{ω} (s−1)·k_s·μ^{ω−s}`, with the equality flag compared
/// against the complete multipartite recognizer.
pub fn polyn_bound(f: &GraphFacts) -> Result<BoundReport, CheckError> {
    let cliques = f.cliques();
    let omega = cliques.omega();
    let mut report = f.spectral_report("polyn", Params::default(), |sp| {
        let mu = sp.radius();
        let rhs: f64 = (2..=omega).map(|s| (s - 1) as f64 * cliques.k(s) as f64 * mu.powi((omega - s) as i32)).sum();
        (mu.powi(omega as i32), rhs)
    })?;
    let structural = is_complete_multipartite_plus_isolated(f.graph()).is_some();
    report.structure_agrees = Some(report.equality == structural);
    Ok(report)
}

/// `μ^{r+1} ≤ (r+1)·k_{r+1} + Σ_{s=2}^{r} (s−1)·k_s·μ^{r+1−s}`.
pub fn theorem1_bound(f: &GraphFacts, r: usize) -> Result<BoundReport, CheckError> {
    if r < 2 {
        return Err(CheckError::Param("theorem1 requires r >= 2".into()));
    }
    let cliques = f.cliques();
    f.spectral_report("theorem1", Params::r(r), |sp| {
        let mu = sp.radius();
        let tail: f64 = (2..=r).map(|s| (s - 1) as f64 * cliques.k(s) as f64 * mu.powi((r + 1 - s) as i32)).sum();
        (mu.powi(r as i32 + 1), (r + 1) as f64 * cliques.k(r + 1) as f64 + tail)
    })
}

/// `k_{r+1} ≥ (μ/n − 1 + 1/r)·(r(r−1)/(r+1))·(n/r)^{r+1}`, reported with
/// the bound on the left.
pub fn theorem2_lower(f: &GraphFacts, r: usize) -> Result<BoundReport, CheckError> {
    if r < 2 {
        return Err(CheckError::Param("theorem2 requires r >= 2".into()));
    }
    let n = f.graph().n() as f64;
    let r_f = r as f64;
    let k = f.cliques().k(r + 1) as f64;
    f.spectral_report("theorem2", Params::r(r), |sp| {
        let bound =
            (sp.radius() / n - 1.0 + 1.0 / r_f) * (r_f * (r_f - 1.0) / (r_f + 1.0)) * (n / r_f).powi(r as i32 + 1);
        (bound, k)
    })
}

/// `Π_{t=from}^{to} ((r−t)/(rt) + α)`.
fn clique_product(r: usize, from: usize, to: usize, alpha: &BigRational) -> BigRational {
    (from..=to).fold(BigRational::one(), |acc, t| {
        acc * (BigRational::new(BigInt::from(r as i64 - t as i64), BigInt::from(r * t)) + alpha)
    })
}

/// Evaluation of the conditional clique bound: premise
/// `(s+1)k_{s+1} ≥ n^{s+1}·Π_{t=1}^{s}((r−t)/(rt) + α)` implies
/// `k_{r+1} ≥ α·(r²/(r+1))·(n/r)^{r+1}` whenever `r < ω`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Theorem3Report {
    pub params: Params,
    /// `r < ω(G)`; evaluations outside the domain are not counted as failures.
    pub in_domain: bool,
    pub premise: bool,
    pub premise_lhs: f64,
    pub premise_rhs: f64,
    pub conclusion: BoundReport,
    /// `¬premise ∨ conclusion`, meaningful only in domain.
    pub implication_holds: bool,
    /// Premise holds, conclusion fails, and `r ≥ ω`.
    pub fails_outside_domain: bool,
}

pub fn theorem3_conditional(f: &GraphFacts, r: usize, s: usize, alpha: &Alpha) -> Result<Theorem3Report, CheckError> {
    if s == 0 || s > r {
        return Err(CheckError::Param(format!("theorem3 requires 1 <= s <= r, got s={s}, r={r}")));
    }
    if alpha.is_negative() {
        return Err(CheckError::Param("theorem3 requires alpha >= 0".into()));
    }
    let n = f.graph().n();
    let cliques = f.cliques();
    let a = alpha.exact();
    let premise_lhs = int(BigInt::from(s + 1) * BigInt::from(cliques.k(s + 1)));
    let premise_rhs = int(BigInt::from(n).pow(s as u32 + 1)) * clique_product(r, 1, s, a);
    let premise = premise_lhs >= premise_rhs;

    let bound = a
        * BigRational::new(BigInt::from(r * r), BigInt::from(r + 1))
        * BigRational::new(BigInt::from(n), BigInt::from(r)).pow(r as i32 + 1);
    let params = Params { r: Some(r), s: Some(s), alpha: Some(alpha.clone()), ..Default::default() };
    let conclusion = BoundReport::from_exact("theorem3", params.clone(), &bound, &int(cliques.k(r + 1)));
    let in_domain = r < cliques.omega();
    Ok(Theorem3Report {
        params,
        in_domain,
        premise,
        premise_lhs: to_f64(&premise_lhs),
        premise_rhs: to_f64(&premise_rhs),
        implication_holds: !premise || conclusion.holds,
        fails_outside_domain: !in_domain && premise && !conclusion.holds,
        conclusion,
    })
}

/// `μ₁² + μ₂² ≤ (1 − 1/r)·2m` for `K_{r+1}`-free graphs.
pub fn conjecture_check(f: &GraphFacts, r: usize) -> Result<BoundReport, CheckError> {
    if r < 2 {
        return Err(CheckError::Param("conjecture requires r >= 2".into()));
    }
    if f.omega() > r {
        return Err(CheckError::OutOfDomain(format!("graph contains K_{}", r + 1)));
    }
    let rhs = (r as f64 - 1.0) / r as f64 * 2.0 * f.graph().m() as f64;
    f.spectral_report("conjecture", Params::r(r), |sp| (sp.radius().powi(2) + sp.second().powi(2), rhs))
}

/// `Σ_u (k_s(u)·w_{l+1}(u) − k_{s+1}(u)·w_l(u)) ≤ (s−1)·k_s(G)·w_l(G)`, exact.
pub fn oldin_check(f: &GraphFacts, s: usize, l: usize) -> Result<BoundReport, CheckError> {
    if s < 2 || l < 2 {
        return Err(CheckError::Param(format!("oldin requires s >= 2 and l >= 2, got s={s}, l={l}")));
    }
    if s > f.omega() {
        return Err(CheckError::OutOfDomain(format!("s={s} exceeds the clique number {}", f.omega())));
    }
    let walks = f.walks(l + 1)?;
    let vc = f.vertex_cliques();
    let overflow = || CheckError::Overflow("oldin");
    let as_i128 = |x: u128| i128::try_from(x).map_err(|_| overflow());
    let mut lhs: i128 = 0;
    for u in 0..f.graph().n() {
        let plus = as_i128(vc.at(u, s))?.checked_mul(as_i128(walks.at(l + 1, u))?).ok_or_else(overflow)?;
        let minus = as_i128(vc.at(u, s + 1))?.checked_mul(as_i128(walks.at(l, u))?).ok_or_else(overflow)?;
        lhs = lhs.checked_add(plus - minus).ok_or_else(overflow)?;
    }
    let rhs = as_i128(f.cliques().k(s))?
        .checked_mul(s as i128 - 1)
        .and_then(|x| x.checked_mul(walks.total(l) as i128))
        .ok_or_else(overflow)?;
    let params = Params { s: Some(s), l: Some(l), ..Default::default() };
    Ok(BoundReport::from_exact("oldin", params, &int(lhs), &int(rhs)))
}

/// Under `μ ≥ (1 − 1/r − α)·n` on a `K_{r+1}`-free graph,
/// `m ≥ ((r−1)/(2r) − 2α)·n²`.
pub fn edge_corollary_check(f: &GraphFacts, r: usize, alpha: &Alpha) -> Result<BoundReport, CheckError> {
    if r < 2 || alpha.is_negative() {
        return Err(CheckError::Param("edge corollary requires r >= 2 and alpha >= 0".into()));
    }
    if f.omega() > r {
        return Err(CheckError::OutOfDomain(format!("graph contains K_{}", r + 1)));
    }
    let n = f.graph().n();
    let mu = f.mu()?;
    let needed = (1.0 - 1.0 / r as f64 - alpha.value()) * n as f64;
    if mu < needed - f.tol.holds_rel * needed.abs().max(mu).max(1.0) {
        return Err(CheckError::OutOfDomain(format!("spectral radius {mu} below {needed}")));
    }
    let bound = (BigRational::new(BigInt::from(r - 1), BigInt::from(2 * r)) - alpha.exact() * int(2)) * int(n * n);
    let params = Params { r: Some(r), alpha: Some(alpha.clone()), ..Default::default() };
    Ok(BoundReport::from_exact("edge-corollary", params, &bound, &int(f.graph().m())))
}

/// Moon–Moser chain as adjacent comparisons `ρ_t ≤ ρ_{t+1}`, exact.
pub fn momo_reports(f: &GraphFacts) -> (MoMoReport, Vec<BoundReport>) {
    let report = moon_moser_ratios(f.cliques());
    let pairs = report
        .ratios
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let params = Params { t: Some(i + 1), ..Default::default() };
            BoundReport::from_exact("momo", params, &w[0], &w[1])
        })
        .collect();
    (report, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, complete_multipartite, cycle, turan_graph};

    fn facts(g: &Graph) -> GraphFacts<'_> {
        GraphFacts::new(g)
    }

    fn near(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn wilf_examples() {
        let k3 = complete_graph(3).unwrap();
        let r = wilf_bound(&facts(&k3)).unwrap();
        assert!(near(r.lhs, 2.0) && near(r.rhs, 2.0) && r.holds && r.equality);

        let c5 = cycle(5).unwrap();
        let r = wilf_bound(&facts(&c5)).unwrap();
        assert!(near(r.slack, 0.5) && !r.equality);

        let e4 = Graph::empty(4).unwrap();
        let r = wilf_bound(&facts(&e4)).unwrap();
        assert!(r.lhs == 0.0 && r.rhs == 0.0 && r.equality);
    }

    #[test]
    fn walk_power_examples() {
        let k3 = complete_graph(3).unwrap();
        let r = walk_power_bound(&facts(&k3), 3).unwrap();
        assert!(near(r.lhs, 8.0) && near(r.rhs, 8.0) && r.equality);

        let c5 = cycle(5).unwrap();
        let r = walk_power_bound(&facts(&c5), 2).unwrap();
        assert!(near(r.lhs, 4.0) && near(r.rhs, 5.0));

        let f = facts(&c5);
        let (a, b) = (walk_power_bound(&f, 1).unwrap(), wilf_bound(&f).unwrap());
        assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs));
        assert!(walk_power_bound(&f, 0).is_err());
    }

    #[test]
    fn turan_edge_examples() {
        let r = turan_edge_bound(&facts(&turan_graph(2, 4).unwrap())).unwrap();
        assert!(r.exact && r.equality && r.rhs == 4.0);
        let r = turan_edge_bound(&facts(&cycle(5).unwrap())).unwrap();
        assert_eq!((r.lhs, r.rhs), (5.0, 6.25));
        let r = turan_edge_bound(&facts(&complete_graph(4).unwrap())).unwrap();
        assert!(r.equality && r.rhs == 6.0);
    }

    #[test]
    fn polyn_examples() {
        let r = polyn_bound(&facts(&complete_graph(3).unwrap())).unwrap();
        assert!(near(r.lhs, 8.0) && near(r.rhs, 8.0) && r.equality);
        assert_eq!(r.structure_agrees, Some(true));

        let r = polyn_bound(&facts(&complete_multipartite(&[2, 2], 0).unwrap())).unwrap();
        assert!(near(r.lhs, 4.0) && near(r.rhs, 4.0) && r.equality);

        let r = polyn_bound(&facts(&cycle(5).unwrap())).unwrap();
        assert!(near(r.lhs, 4.0) && near(r.rhs, 5.0) && !r.equality);
        assert_eq!(r.structure_agrees, Some(true));

        let r = polyn_bound(&facts(&Graph::empty(3).unwrap())).unwrap();
        assert!(r.equality && r.structure_agrees == Some(true));
    }

    #[test]
    fn theorem1_examples() {
        let r = theorem1_bound(&facts(&complete_graph(3).unwrap()), 2).unwrap();
        assert!(near(r.lhs, 8.0) && near(r.rhs, 9.0));
        let r = theorem1_bound(&facts(&cycle(5).unwrap()), 2).unwrap();
        assert!(near(r.lhs, 8.0) && near(r.rhs, 10.0));
        let r = theorem1_bound(&facts(&complete_multipartite(&[2, 2], 0).unwrap()), 3).unwrap();
        assert!(near(r.lhs, 16.0) && near(r.rhs, 16.0) && r.equality);
        assert!(theorem1_bound(&facts(&cycle(5).unwrap()), 1).is_err());
    }

    #[test]
    fn theorem2_examples() {
        let r = theorem2_lower(&facts(&complete_graph(4).unwrap()), 2).unwrap();
        assert!(near(r.lhs, 4.0 / 3.0) && r.rhs == 4.0 && r.holds);
        let r = theorem2_lower(&facts(&turan_graph(2, 4).unwrap()), 2).unwrap();
        assert!(near(r.lhs, 0.0) && r.rhs == 0.0 && r.equality);
        let r = theorem2_lower(&facts(&cycle(5).unwrap()), 2).unwrap();
        assert!(r.lhs < 0.0 && r.rhs == 0.0 && r.holds);
        assert!(near(r.lhs, (0.4 - 0.5) * (2.0 / 3.0) * 2.5f64.powi(3)));
    }

    #[test]
    fn theorem3_examples() {
        let k4 = complete_graph(4).unwrap();
        let rep = theorem3_conditional(&facts(&k4), 2, 1, &Alpha::ratio(1, 4)).unwrap();
        assert!(rep.in_domain && rep.premise);
        assert_eq!((rep.premise_lhs, rep.premise_rhs), (12.0, 12.0));
        assert!(near(rep.conclusion.lhs, 8.0 / 3.0) && rep.conclusion.rhs == 4.0);
        assert!(rep.implication_holds);

        let rep = theorem3_conditional(&facts(&k4), 2, 1, &Alpha::zero()).unwrap();
        assert_eq!(rep.conclusion.lhs, 0.0);
        assert!(rep.implication_holds);

        let c5 = cycle(5).unwrap();
        let rep = theorem3_conditional(&facts(&c5), 2, 1, &Alpha::ratio(1, 10)).unwrap();
        assert!(!rep.in_domain);

        assert!(theorem3_conditional(&facts(&c5), 2, 3, &Alpha::zero()).is_err());
        assert!(theorem3_conditional(&facts(&c5), 2, 1, &Alpha::ratio(-1, 10)).is_err());
    }

    #[test]
    fn conjecture_examples() {
        let r = conjecture_check(&facts(&turan_graph(2, 4).unwrap()), 2).unwrap();
        assert!(near(r.lhs, 4.0) && r.rhs == 4.0 && r.equality);

        let r = conjecture_check(&facts(&cycle(5).unwrap()), 2).unwrap();
        let mu2 = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!(near(r.lhs, 4.0 + mu2 * mu2) && r.rhs == 5.0 && r.holds);

        let r = conjecture_check(&facts(&turan_graph(3, 6).unwrap()), 3).unwrap();
        assert!(near(r.lhs, 16.0) && near(r.rhs, 16.0) && r.equality);

        assert!(matches!(conjecture_check(&facts(&complete_graph(4).unwrap()), 2), Err(CheckError::OutOfDomain(_))));
    }

    #[test]
    fn conjecture_fails_on_small_complete_graphs() {
        // μ₂(K_r) = −1 contributes to the left side
        let r = conjecture_check(&facts(&complete_graph(2).unwrap()), 2).unwrap();
        assert!(!r.holds && near(r.lhs, 2.0) && r.rhs == 1.0);
        let r = conjecture_check(&facts(&complete_graph(3).unwrap()), 3).unwrap();
        assert!(!r.holds && near(r.lhs, 5.0) && near(r.rhs, 4.0));
    }

    #[test]
    fn oldin_examples() {
        let r = oldin_check(&facts(&complete_graph(3).unwrap()), 2, 2).unwrap();
        assert!(r.exact && r.lhs == 18.0 && r.rhs == 18.0 && r.equality);
        let r = oldin_check(&facts(&cycle(5).unwrap()), 2, 2).unwrap();
        assert_eq!((r.lhs, r.rhs), (40.0, 50.0));
        assert!(matches!(oldin_check(&facts(&cycle(5).unwrap()), 3, 2), Err(CheckError::OutOfDomain(_))));
        assert!(matches!(oldin_check(&facts(&cycle(5).unwrap()), 2, 1), Err(CheckError::Param(_))));
    }

    #[test]
    fn edge_corollary_examples() {
        let r = edge_corollary_check(&facts(&turan_graph(2, 4).unwrap()), 2, &Alpha::zero()).unwrap();
        assert!(r.equality && r.lhs == 4.0);
        let r = edge_corollary_check(&facts(&turan_graph(3, 6).unwrap()), 3, &Alpha::zero()).unwrap();
        assert!(r.equality && r.lhs == 12.0);
        assert!(matches!(
            edge_corollary_check(&facts(&cycle(5).unwrap()), 2, &Alpha::zero()),
            Err(CheckError::OutOfDomain(_))
        ));
    }

    #[test]
    fn momo_pairs() {
        let g = complete_multipartite(&[1, 1, 1], 1).unwrap();
        let (report, pairs) = momo_reports(&facts(&g));
        assert!(report.monotone);
        assert_eq!(pairs.len(), 1);
        assert_eq!((pairs[0].lhs, pairs[0].rhs), (-2.5, -1.5));
    }

    #[test]
    fn params_display() {
        let p = Params { r: Some(2), s: Some(1), alpha: Some(Alpha::ratio(1, 20)), ..Default::default() };
        assert_eq!(p.to_string(), "r=2,s=1,alpha=0.05");
        assert_eq!(Params::default().to_string(), "");
    }
}
