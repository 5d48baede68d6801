//! Brute-force oracles, independent of the traversal-based counters.

use thiserror::Error;

use crate::cliques::CliqueProfile;
use crate::graph::Graph;
use crate::spectral::WalkProfile;

pub const CLIQUE_ORACLE_MAX_N: usize = 20;
pub const WALK_ORACLE_MAX_N: usize = 10;
pub const WALK_ORACLE_MAX_L: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute-force oracle budget exceeded: {0}")]
pub struct OracleBudget(pub String);

/// Counts cliques by testing every vertex subset for completeness.
pub fn brute_force_cliques(g: &Graph) -> Result<CliqueProfile, OracleBudget> {
    let n = g.n();
    if n > CLIQUE_ORACLE_MAX_N {
        return Err(OracleBudget(format!("n = {n} > {CLIQUE_ORACLE_MAX_N}")));
    }
    let mut counts = vec![0u128; n];
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
        let complete = members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if complete {
            counts[members.len() - 1] += 1;
        }
    }
    Ok(CliqueProfile::from_counts(n, &counts))
}

/// Counts walks by recursively enumerating vertex sequences.
pub fn brute_force_walks(g: &Graph, max_length: usize) -> Result<WalkProfile, OracleBudget> {
    let n = g.n();
    if n > WALK_ORACLE_MAX_N || max_length > WALK_ORACLE_MAX_L || max_length == 0 {
        return Err(OracleBudget(format!("n = {n}, L = {max_length}")));
    }
    fn extend(g: &Graph, last: usize, len: usize, max: usize, tally: &mut [u128]) {
        tally[len - 1] += 1;
        if len == max {
            return;
        }
        for next in 0..g.n() {
            if g.has_edge(last, next) {
                extend(g, next, len + 1, max, tally);
            }
        }
    }
    let by_start: Vec<Vec<u128>> = (0..n)
        .map(|start| {
            let mut tally = vec![0u128; max_length];
            extend(g, start, 1, max_length, &mut tally);
            tally
        })
        .collect();
    let per_vertex = (0..max_length).map(|l| by_start.iter().map(|t| t[l]).collect()).collect();
    Ok(WalkProfile::from_per_vertex(per_vertex))
}
