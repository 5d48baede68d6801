//! Desk-scale check of the spectral stability theorem: a `K_{r+1}`-free
//! graph with `μ ≥ (1 − 1/r − α)·n` contains an induced `r`-partite
//! subgraph `G₀` with `v(G₀) > (1 − 3α^{1/3})·n` and
//! `δ(G₀) > (1 − 1/r − 6α^{1/3})·n`.
//!
//! At `α = 0` the strict order bound `v(G₀) > n` is unsatisfiable, so that
//! case is evaluated with non-strict comparisons and flagged as boundary.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::cliques::{is_kfree, proper_coloring_within};
use crate::exact::{int, Alpha};
use crate::graph::{Graph, VertexSet};
use crate::par::{find_first, Jobs};
use crate::spectral::{spectral_radius, SpectralError};
use crate::tol::Tolerances;

/// Largest order accepted by the exhaustive subset search.
pub const EXHAUSTIVE_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    #[error("stability premise does not hold")]
    PremiseFailed,
    #[error("exhaustive witness search refused for n = {0} > {EXHAUSTIVE_MAX_N}")]
    TooLarge(usize),
    #[error("stability requires r >= 2, got {0}")]
    BadR(usize),
    #[error("malformed witness: {0}")]
    Malformed(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    pub order_min: f64,
    pub degree_min: f64,
    /// `α = 0`: comparisons are non-strict.
    pub boundary: bool,
}

impl Thresholds {
    pub fn new(n: usize, r: usize, alpha: &Alpha) -> Self {
        let cube = alpha.value().cbrt();
        let n = n as f64;
        Thresholds {
            order_min: (1.0 - 3.0 * cube) * n,
            degree_min: (1.0 - 1.0 / r as f64 - 6.0 * cube) * n,
            boundary: alpha.is_zero(),
        }
    }

    fn exceeds(&self, value: usize, threshold: f64) -> bool {
        if self.boundary {
            value as f64 >= threshold
        } else {
            value as f64 > threshold
        }
    }

    pub fn order_ok(&self, order: usize) -> bool {
        self.exceeds(order, self.order_min)
    }

    pub fn degree_ok(&self, degree: usize) -> bool {
        self.exceeds(degree, self.degree_min)
    }
}

/// An induced `r`-partite subgraph certifying the conclusion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityWitness {
    pub vertices: VertexSet,
    pub partition: Vec<Vec<usize>>,
    pub order: usize,
    pub min_degree: usize,
}

impl StabilityWitness {
    fn build(g: &Graph, vertices: VertexSet, partition: Vec<Vec<usize>>) -> Self {
        let order = vertices.len();
        let min_degree = vertices.iter().map(|u| g.degree_within(u, &vertices)).min().unwrap_or(0);
        StabilityWitness { vertices, partition, order, min_degree }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    PremiseFailed,
    Witnessed,
    HeuristicMiss,
    /// Contradicts the theorem.
    ExhaustiveMiss,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub r: usize,
    pub n: usize,
    pub alpha: Alpha,
    pub premise_ok: bool,
    pub spectral_radius: f64,
    pub thresholds: Thresholds,
    pub search_mode: SearchMode,
    pub witness: Option<StabilityWitness>,
    pub verdict: Verdict,
}

/// `K_{r+1}`-free, `0 ≤ α ≤ 2⁻¹⁰r⁻⁶`, and `μ ≥ (1 − 1/r − α)·n − ε`.
pub fn stability_premise(g: &Graph, r: usize, alpha: &Alpha) -> Result<bool, StabilityError> {
    stability_premise_with(g, r, alpha, &Tolerances::default())
}

pub fn stability_premise_with(g: &Graph, r: usize, alpha: &Alpha, tol: &Tolerances) -> Result<bool, StabilityError> {
    if r < 2 {
        return Err(StabilityError::BadR(r));
    }
    if alpha.is_negative() || alpha.exact() > Alpha::stability_max(r).exact() {
        return Ok(false);
    }
    if !is_kfree(g, r + 1) {
        return Ok(false);
    }
    let mu = spectral_radius(g)?;
    let needed = (1.0 - 1.0 / r as f64 - alpha.value()) * g.n() as f64;
    let scale = 1f64.max(mu.abs()).max(needed.abs());
    Ok(mu - needed >= -tol.holds_rel * scale)
}

fn min_degree_ok(g: &Graph, set: &VertexSet, th: &Thresholds) -> bool {
    set.iter().all(|u| th.degree_ok(g.degree_within(u, set)))
}

fn exhaustive_search(g: &Graph, r: usize, th: &Thresholds, jobs: Jobs) -> Option<StabilityWitness> {
    let n = g.n();
    for size in (0..=n).rev() {
        if !th.order_ok(size) {
            break;
        }
        // lowest mask of this size satisfying both constraints
        let hit = find_first(1u64 << n, jobs, |mask| {
            if mask.count_ones() as usize != size {
                return false;
            }
            let set = VertexSet::from_mask(n, mask);
            min_degree_ok(g, &set, th) && proper_coloring_within(g, &set, r).is_some()
        });
        if let Some(mask) = hit {
            let set = VertexSet::from_mask(n, mask);
            let partition = proper_coloring_within(g, &set, r)?;
            return Some(StabilityWitness::build(g, set, partition));
        }
    }
    None
}

/// Greedy `r`-partition by descending degree followed by single-vertex
/// moves to a local minimum of intra-class edges.
fn heuristic_partition(g: &Graph, r: usize) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
    let mut class = vec![usize::MAX; n];
    let weight = |class: &[usize], u: usize, c: usize| g.neighbors(u).filter(|&v| class[v] == c).count();
    for &u in &order {
        class[u] = (0..r).min_by_key(|&c| (weight(&class, u, c), c)).unwrap_or(0);
    }
    loop {
        let mut moved = false;
        for u in 0..n {
            let here = weight(&class, u, class[u]);
            let (best, cost) = (0..r).map(|c| (c, weight(&class, u, c))).min_by_key(|&(c, w)| (w, c)).unwrap_or((0, 0));
            if cost < here {
                class[u] = best;
                moved = true;
            }
        }
        if !moved {
            return class;
        }
    }
}

fn heuristic_search(g: &Graph, r: usize, th: &Thresholds) -> Option<StabilityWitness> {
    let n = g.n();
    let class = heuristic_partition(g, r);
    let mut set = VertexSet::from_iter_n(n, (0..n).filter(|&u| g.neighbors(u).all(|v| class[v] != class[u])));
    loop {
        let low: Vec<usize> = set.iter().filter(|&u| !th.degree_ok(g.degree_within(u, &set))).collect();
        if low.is_empty() {
            break;
        }
        for u in low {
            set.remove(u);
        }
    }
    if !th.order_ok(set.len()) {
        return None;
    }
    let partition: Vec<Vec<usize>> =
        (0..r).map(|c| set.iter().filter(|&u| class[u] == c).collect::<Vec<_>>()).filter(|c| !c.is_empty()).collect();
    Some(StabilityWitness::build(g, set, partition))
}

/// Searches for a witness; the premise is enforced.
pub fn find_stability_witness(
    g: &Graph,
    r: usize,
    alpha: &Alpha,
    mode: SearchMode,
) -> Result<Option<StabilityWitness>, StabilityError> {
    find_stability_witness_with(g, r, alpha, mode, Jobs::Fixed(1))
}

pub fn find_stability_witness_with(
    g: &Graph,
    r: usize,
    alpha: &Alpha,
    mode: SearchMode,
    jobs: Jobs,
) -> Result<Option<StabilityWitness>, StabilityError> {
    if !stability_premise(g, r, alpha)? {
        return Err(StabilityError::PremiseFailed);
    }
    let th = Thresholds::new(g.n(), r, alpha);
    match mode {
        SearchMode::Exhaustive if g.n() > EXHAUSTIVE_MAX_N => Err(StabilityError::TooLarge(g.n())),
        SearchMode::Exhaustive => Ok(exhaustive_search(g, r, &th, jobs)),
        SearchMode::Heuristic => Ok(heuristic_search(g, r, &th)),
    }
}

/// Recomputes the induced subgraph and checks independence of classes,
/// order, and minimum degree against the thresholds.
///
/// Structural malformation (members outside `V(g)`, classes that do not
/// partition the vertex set) is an error; a witness that is well formed
/// but fails a constraint yields `Ok(false)`.
pub fn verify_witness(g: &Graph, r: usize, alpha: &Alpha, w: &StabilityWitness) -> Result<bool, StabilityError> {
    let n = g.n();
    if let Some(u) = w.vertices.iter().find(|&u| u >= n) {
        return Err(StabilityError::Malformed(format!("vertex {u} outside the graph")));
    }
    let vertices = VertexSet::from_iter_n(n, w.vertices.iter());
    let mut covered = VertexSet::new(n);
    for &u in w.partition.iter().flatten() {
        if !vertices.contains(u) {
            return Err(StabilityError::Malformed(format!("class member {u} not in the witness set")));
        }
        if covered.contains(u) {
            return Err(StabilityError::Malformed(format!("vertex {u} in two classes")));
        }
        covered.insert(u);
    }
    if covered != vertices {
        return Err(StabilityError::Malformed("classes do not cover the witness set".into()));
    }
    let independent = w.partition.iter().all(|c| c.iter().all(|&u| c.iter().all(|&v| !g.has_edge(u, v))));
    let rebuilt = StabilityWitness::build(g, vertices, w.partition.clone());
    let th = Thresholds::new(n, r, alpha);
    Ok(w.partition.len() <= r
        && independent
        && rebuilt.order == w.order
        && rebuilt.min_degree == w.min_degree
        && th.order_ok(rebuilt.order)
        && th.degree_ok(rebuilt.min_degree))
}

/// Premise, search, and verdict in one report.
pub fn stability_report(
    g: &Graph,
    r: usize,
    alpha: &Alpha,
    mode: SearchMode,
    jobs: Jobs,
) -> Result<StabilityReport, StabilityError> {
    let premise_ok = stability_premise(g, r, alpha)?;
    let thresholds = Thresholds::new(g.n(), r, alpha);
    let mut report = StabilityReport {
        r,
        n: g.n(),
        alpha: alpha.clone(),
        premise_ok,
        spectral_radius: spectral_radius(g)?,
        thresholds,
        search_mode: mode,
        witness: None,
        verdict: Verdict::PremiseFailed,
    };
    if !premise_ok {
        return Ok(report);
    }
    report.witness = find_stability_witness_with(g, r, alpha, mode, jobs)?;
    report.verdict = match (&report.witness, mode) {
        (Some(_), _) => Verdict::Witnessed,
        (None, SearchMode::Heuristic) => Verdict::HeuristicMiss,
        (None, SearchMode::Exhaustive) => Verdict::ExhaustiveMiss,
    };
    Ok(report)
}

/// `K_{r+1}`-free, `0 < β ≤ 2⁻⁹r⁻⁶`, and `m ≥ ((r−1)/(2r) − β)·n²`.
pub fn niro_premise(g: &Graph, r: usize, beta: &Alpha) -> bool {
    if r < 2 || beta.is_negative() || beta.is_zero() || beta.exact() > Alpha::niro_max(r).exact() {
        return false;
    }
    if !is_kfree(g, r + 1) {
        return false;
    }
    let n = g.n();
    let bound = (BigRational::new(BigInt::from(r - 1), BigInt::from(2 * r)) - beta.exact()) * int(n * n);
    int(g.m()) >= bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, turan_graph};

    #[test]
    fn premise_examples() {
        assert!(stability_premise(&turan_graph(2, 8).unwrap(), 2, &Alpha::zero()).unwrap());
        assert!(!stability_premise(&cycle(5).unwrap(), 2, &Alpha::zero()).unwrap());
        assert!(!stability_premise(&complete_graph(4).unwrap(), 2, &Alpha::zero()).unwrap());
        // α beyond 2⁻¹⁰r⁻⁶
        assert!(!stability_premise(&turan_graph(2, 8).unwrap(), 2, &Alpha::ratio(1, 1000)).unwrap());
        assert_eq!(stability_premise(&cycle(5).unwrap(), 1, &Alpha::zero()), Err(StabilityError::BadR(1)));
    }

    #[test]
    fn turan_witness_at_alpha_max() {
        let g = turan_graph(3, 6).unwrap();
        let alpha = Alpha::stability_max(3);
        for mode in [SearchMode::Exhaustive, SearchMode::Heuristic] {
            let w = find_stability_witness(&g, 3, &alpha, mode).unwrap().unwrap();
            assert_eq!((w.order, w.min_degree), (6, 4));
            assert!(verify_witness(&g, 3, &alpha, &w).unwrap());
        }
    }

    #[test]
    fn boundary_alpha_zero_accepts_whole_graph() {
        let g = turan_graph(2, 8).unwrap();
        let report = stability_report(&g, 2, &Alpha::zero(), SearchMode::Exhaustive, Jobs::Fixed(1)).unwrap();
        assert!(report.thresholds.boundary);
        assert_eq!(report.verdict, Verdict::Witnessed);
        assert_eq!(report.witness.unwrap().order, 8);
    }

    #[test]
    fn premise_failure_is_reported() {
        let c5 = cycle(5).unwrap();
        assert_eq!(
            find_stability_witness(&c5, 2, &Alpha::ratio(1, 100_000), SearchMode::Heuristic),
            Err(StabilityError::PremiseFailed)
        );
        let report =
            stability_report(&c5, 2, &Alpha::ratio(1, 100_000), SearchMode::Exhaustive, Jobs::Fixed(1)).unwrap();
        assert_eq!(report.verdict, Verdict::PremiseFailed);
    }

    #[test]
    fn exhaustive_refuses_large_graphs() {
        let g = turan_graph(2, 18).unwrap();
        assert_eq!(
            find_stability_witness(&g, 2, &Alpha::zero(), SearchMode::Exhaustive),
            Err(StabilityError::TooLarge(18))
        );
    }

    #[test]
    fn verify_rejects_bad_witnesses() {
        let g = turan_graph(3, 6).unwrap();
        let alpha = Alpha::stability_max(3);
        let good = find_stability_witness(&g, 3, &alpha, SearchMode::Exhaustive).unwrap().unwrap();

        // vertices 0 and 2 are adjacent (different classes of T_3(6))
        let mut injected = good.clone();
        injected.partition = vec![vec![0, 1, 2], vec![3], vec![4, 5]];
        assert!(!verify_witness(&g, 3, &alpha, &injected).unwrap());

        let small_set = VertexSet::from_iter_n(6, [0, 2, 4]);
        let small = StabilityWitness::build(&g, small_set, vec![vec![0], vec![2], vec![4]]);
        assert!(!verify_witness(&g, 3, &alpha, &small).unwrap());

        let mut outside = good.clone();
        outside.partition[0].push(9);
        assert!(matches!(verify_witness(&g, 3, &alpha, &outside), Err(StabilityError::Malformed(_))));
    }

    #[test]
    fn niro_examples() {
        let beta = Alpha::niro_max(2);
        assert!(niro_premise(&turan_graph(2, 8).unwrap(), 2, &beta));
        assert!(!niro_premise(&cycle(5).unwrap(), 2, &beta));
        assert!(!niro_premise(&complete_graph(4).unwrap(), 3, &Alpha::niro_max(3)));
        assert!(!niro_premise(&turan_graph(2, 8).unwrap(), 2, &Alpha::zero()));
    }
}
