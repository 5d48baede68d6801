//! Exact clique statistics, the Moon–Moser ratio chain, and structural
//! recognizers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};

/// Exact clique counts `k_0 = 1, k_1 = n, k_2 = m, …, k_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueProfile {
    counts: Vec<u128>,
    omega: usize,
}

impl CliqueProfile {
    /// Builds a profile from `k_1, k_2, …`; trailing sizes default to zero.
    pub fn from_counts(n: usize, counts: &[u128]) -> Self {
        let mut all = vec![0u128; n + 1];
        all[0] = 1;
        all[1..=counts.len()].copy_from_slice(counts);
        let omega = (1..=n).rev().find(|&s| all[s] > 0).unwrap_or(0);
        CliqueProfile { counts: all, omega }
    }

    /// Number of `s`-cliques; zero past the order of the graph.
    pub fn k(&self, s: usize) -> u128 {
        self.counts.get(s).copied().unwrap_or(0)
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// `k_1, …, k_n`.
    pub fn counts(&self) -> &[u128] {
        &self.counts[1..]
    }
}

/// Per-vertex counts `k_s(u)` for `1 ≤ s ≤ ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCliqueProfile {
    omega: usize,
    per_vertex: Vec<Vec<u128>>,
}

impl VertexCliqueProfile {
    /// Number of `s`-cliques containing `u`; zero for `s > ω`.
    pub fn at(&self, u: usize, s: usize) -> u128 {
        self.per_vertex[u].get(s).copied().unwrap_or(0)
    }

    pub fn omega(&self) -> usize {
        self.omega
    }
}

/// Visits every clique once by ordered expansion: a clique is reached from
/// its smallest vertex by adding members in increasing order, each step
/// intersecting the candidate set with the new member's neighborhood.
fn for_each_clique<F: FnMut(&[usize])>(g: &Graph, mut visit: F) {
    let n = g.n();
    let mut members = Vec::with_capacity(n);
    if g.words() == 1 {
        fn expand<F: FnMut(&[usize])>(g: &Graph, mut cand: u64, members: &mut Vec<usize>, visit: &mut F) {
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                members.push(v);
                visit(members);
                let next = cand & g.row(v)[0];
                if next != 0 {
                    expand(g, next, members, visit);
                }
                members.pop();
            }
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        expand(g, all, &mut members, &mut visit);
    } else {
        fn expand<F: FnMut(&[usize])>(g: &Graph, mut cand: Vec<u64>, members: &mut Vec<usize>, visit: &mut F) {
            while let Some(k) = cand.iter().position(|&w| w != 0) {
                let v = k * 64 + cand[k].trailing_zeros() as usize;
                cand[k] &= cand[k] - 1;
                members.push(v);
                visit(members);
                let next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
                if next.iter().any(|&w| w != 0) {
                    expand(g, next, members, visit);
                }
                members.pop();
            }
        }
        expand(g, VertexSet::full(n).words().to_vec(), &mut members, &mut visit);
    }
}

pub fn clique_counts(g: &Graph) -> CliqueProfile {
    let mut counts = vec![0u128; g.n() + 1];
    counts[0] = 1;
    for_each_clique(g, |c| counts[c.len()] += 1);
    let omega = (1..=g.n()).rev().find(|&s| counts[s] > 0).unwrap_or(0);
    CliqueProfile { counts, omega }
}

pub fn vertex_clique_counts(g: &Graph) -> VertexCliqueProfile {
    let mut per_vertex = vec![vec![0u128; g.n() + 1]; g.n()];
    let mut omega = 0;
    for_each_clique(g, |c| {
        omega = omega.max(c.len());
        for &u in c {
            per_vertex[u][c.len()] += 1;
        }
    });
    for row in &mut per_vertex {
        row.truncate(omega + 1);
    }
    VertexCliqueProfile { omega, per_vertex }
}

pub fn clique_number(g: &Graph) -> usize {
    clique_counts(g).omega()
}

/// True iff `g` has no clique on `k` vertices.
pub fn is_kfree(g: &Graph, k: usize) -> bool {
    fn has_clique(g: &Graph, cand: &VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        let mut rest = cand.clone();
        for v in cand.iter() {
            rest.remove(v);
            if rest.len() + 1 < need {
                return false;
            }
            let mut next = VertexSet::new(g.n());
            for u in rest.iter().filter(|&u| g.has_edge(u, v)) {
                next.insert(u);
            }
            if has_clique(g, &next, need - 1) {
                return true;
            }
        }
        false
    }
    !has_clique(g, &g.vertices(), k)
}

/// Moon–Moser ratios `ρ_t = (t+1)k_{t+1} / (t·k_t) − n/t` for `1 ≤ t < ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct MoMoReport {
    pub ratios: Vec<BigRational>,
    pub monotone: bool,
}

impl Serialize for MoMoReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Ratio {
            t: usize,
            exact: String,
            value: f64,
        }
        #[derive(Serialize)]
        struct Out {
            ratios: Vec<Ratio>,
            monotone: bool,
        }
        Out {
            ratios: self
                .ratios
                .iter()
                .enumerate()
                .map(|(i, r)| Ratio { t: i + 1, exact: r.to_string(), value: r.to_f64().unwrap_or(f64::NAN) })
                .collect(),
            monotone: self.monotone,
        }
        .serialize(s)
    }
}

pub fn moon_moser_ratios(profile: &CliqueProfile) -> MoMoReport {
    let n = BigInt::from(profile.n());
    let ratios: Vec<BigRational> = (1..profile.omega())
        .map(|t| {
            let t_big = BigInt::from(t);
            let num = BigInt::from(t + 1) * BigInt::from(profile.k(t + 1));
            let den = &t_big * BigInt::from(profile.k(t));
            BigRational::new(num, den) - BigRational::new(n.clone(), t_big)
        })
        .collect();
    let monotone = ratios.windows(2).all(|w| w[0] <= w[1]);
    MoMoReport { ratios, monotone }
}

pub fn moon_moser_check(g: &Graph) -> MoMoReport {
    moon_moser_ratios(&clique_counts(g))
}

/// Partition returned by [`is_complete_multipartite_plus_isolated`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultipartiteShape {
    /// Classes ordered by smallest member, members ascending.
    pub classes: Vec<Vec<usize>>,
    pub isolated: Vec<usize>,
}

/// Strips isolated vertices and accepts iff non-adjacency on the rest is an
/// equivalence relation, i.e. the complement of the remainder is a disjoint
/// union of cliques.
pub fn is_complete_multipartite_plus_isolated(g: &Graph) -> Option<MultipartiteShape> {
    let n = g.n();
    let isolated = g.isolated_vertices();
    let mut rest = VertexSet::full(n);
    for u in isolated.iter() {
        rest.remove(u);
    }
    let non_neighbors = |u: usize| {
        let mut s = rest.clone();
        for v in g.neighbors(u) {
            s.remove(v);
        }
        s
    };
    let mut assigned = VertexSet::new(n);
    let mut classes = Vec::new();
    for u in rest.iter() {
        if assigned.contains(u) {
            continue;
        }
        let class = non_neighbors(u);
        for v in class.iter() {
            if assigned.contains(v) || non_neighbors(v) != class {
                return None;
            }
            assigned.insert(v);
        }
        classes.push(class.iter().collect());
    }
    Some(MultipartiteShape { classes, isolated: isolated.iter().collect() })
}

/// Backtracking search for a partition of `set` into at most `r`
/// independent sets, coloring vertices in increasing order. A vertex may
/// open at most one new class, so the result is deterministic.
pub fn proper_coloring_within(g: &Graph, set: &VertexSet, r: usize) -> Option<Vec<Vec<usize>>> {
    fn extend(g: &Graph, order: &[usize], r: usize, classes: &mut Vec<VertexSet>) -> bool {
        let Some((&v, rest)) = order.split_first() else {
            return true;
        };
        for c in 0..(classes.len() + 1).min(r) {
            if c == classes.len() {
                classes.push(VertexSet::new(g.n()));
            }
            if g.row(v).iter().zip(classes[c].words()).all(|(a, b)| a & b == 0) {
                classes[c].insert(v);
                if extend(g, rest, r, classes) {
                    return true;
                }
                classes[c].remove(v);
            }
        }
        while classes.last().is_some_and(VertexSet::is_empty) {
            classes.pop();
        }
        false
    }

    let order: Vec<usize> = set.iter().collect();
    let mut classes = Vec::with_capacity(r.min(order.len()));
    extend(g, &order, r, &mut classes).then(|| classes.iter().map(|c| c.iter().collect()).collect())
}

pub fn proper_coloring(g: &Graph, r: usize) -> Option<Vec<Vec<usize>>> {
    proper_coloring_within(g, &g.vertices(), r)
}

/// `Σ_s s·k_s(G)`, used by the handshake identity checks.
pub fn weighted_clique_total(profile: &CliqueProfile) -> u128 {
    (1..=profile.n()).map(|s| s as u128 * profile.k(s)).sum()
}

/// True iff `Σ_u k_s(u) = s·k_s(G)` for every `s ≤ ω`.
pub fn handshake_holds(g: &Graph, profile: &CliqueProfile, per_vertex: &VertexCliqueProfile) -> bool {
    (1..=profile.omega()).all(|s| {
        let sum: u128 = (0..g.n()).map(|u| per_vertex.at(u, s)).sum();
        sum == s as u128 * profile.k(s)
    }) && profile.omega() == per_vertex.omega()
}
