//! Deterministic graph generators.
//!
//! Random graphs use ChaCha8 (`rand_chacha`) seeded through
//! `seed_from_u64`; every unordered pair `(i, j)`, `i < j`, is visited in
//! graph6 order and drawn with `gen_bool(p)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError, HARD_MAX_N};

pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&vec![1; n], 0)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges_with_cap(n, (0..n).map(|i| (i, (i + 1) % n)).filter(|(u, v)| u != v), HARD_MAX_N)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges_with_cap(n, (1..n).map(|i| (i - 1, i)), HARD_MAX_N)
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    Graph::from_edges_with_cap(leaves + 1, (1..=leaves).map(|i| (0, i)), HARD_MAX_N)
}

/// Complete multipartite graph on consecutive vertex blocks of the given
/// sizes, followed by `isolated` vertices of degree zero.
pub fn complete_multipartite(parts: &[usize], isolated: usize) -> Result<Graph, GraphError> {
    if parts.contains(&0) {
        return Err(GraphError::EmptyPart);
    }
    if parts.is_empty() && isolated == 0 {
        return Err(GraphError::NoParts);
    }
    let n = parts.iter().sum::<usize>() + isolated;
    let mut class = Vec::with_capacity(n);
    for (c, &size) in parts.iter().enumerate() {
        class.extend(std::iter::repeat_n(c, size));
    }
    let body = class.len();
    let edges = (0..body).flat_map(|u| ((u + 1)..body).map(move |v| (u, v)));
    let class = &class;
    Graph::from_edges_with_cap(n, edges.filter(|&(u, v)| class[u] != class[v]), HARD_MAX_N)
}

/// Balanced complete `r`-partite graph on `n` vertices; the `n mod r`
/// larger classes come first.
pub fn turan_graph(r: usize, n: usize) -> Result<Graph, GraphError> {
    if r == 0 || r > n {
        return Err(GraphError::TooManyParts { r, n });
    }
    let (q, extra) = (n / r, n % r);
    let parts: Vec<usize> = (0..r).map(|c| q + usize::from(c < extra)).collect();
    complete_multipartite(&parts, 0)
}

/// `G(n, p)` driven by a seeded ChaCha8 stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges_with_cap(n, edges, HARD_MAX_N)
}
