//! Simple undirected graphs stored as fixed-width adjacency bit-rows.
//!
//! Every row occupies `words` machine words, so neighborhood intersections
//! are a word-wise `&` regardless of the order of the graph. The default
//! vertex cap is [`DEFAULT_MAX_N`]; generators and callers that opt in may
//! go up to [`HARD_MAX_N`].

mod generators;
mod graph6;
mod vertex_set;

pub use generators::{complete_graph, complete_multipartite, cycle, path, random_graph, star, turan_graph};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_with_cap};
pub use vertex_set::VertexSet;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex cap applied when no explicit cap is given.
pub const DEFAULT_MAX_N: usize = 64;
/// Largest order the multi-word representation accepts.
pub const HARD_MAX_N: usize = 512;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("order {n} exceeds the vertex cap {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("edge endpoint {vertex} out of range for order {n}")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("part count {r} exceeds order {n}")]
    TooManyParts { r: usize, n: usize },
    #[error("part sizes must be positive")]
    EmptyPart,
    #[error("complete multipartite graph needs at least one part or isolated vertex")]
    NoParts,
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("graph6: byte {byte:#04x} at offset {offset} outside the printable range 63..=126")]
    Graph6Char { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} payload bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("edge mask enumeration supports at most 11 vertices, got {0}")]
    MaskOrder(usize),
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    degrees: Vec<u32>,
    m: usize,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Builds a graph from an edge list using the default vertex cap.
    ///
    /// Duplicate edges (in either orientation) are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_with_cap(n, edges, DEFAULT_MAX_N)
    }

    pub fn from_edges_with_cap<I>(n: usize, edges: I, cap: usize) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty_with_cap(n, cap)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.set_edge(u, v);
        }
        g.refresh();
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::empty_with_cap(n, DEFAULT_MAX_N)
    }

    pub(crate) fn empty_with_cap(n: usize, cap: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let cap = cap.min(HARD_MAX_N);
        if n > cap {
            return Err(GraphError::TooManyVertices { n, cap });
        }
        let words = words_for(n);
        Ok(Graph { n, words, rows: vec![0; n * words], degrees: vec![0; n], m: 0 })
    }

    /// Builds the graph on `n ≤ 11` vertices whose edges are the set bits of
    /// `mask`, where bit `i` is the `i`-th pair in graph6 order
    /// `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if n > 11 {
            return Err(GraphError::MaskOrder(n));
        }
        let mut g = Self::empty(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set_edge(i, j);
                }
                bit += 1;
            }
        }
        g.refresh();
        Ok(g)
    }

    #[inline]
    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    fn refresh(&mut self) {
        for u in 0..self.n {
            self.degrees[u] = self.row(u).iter().map(|w| w.count_ones()).sum();
        }
        self.m = self.degrees.iter().map(|&d| d as usize).sum::<usize>() / 2;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u] as usize
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees.iter().map(|&d| d as usize)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        vertex_set::iter_bits(self.row(u))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_iter_n(self.n, (0..self.n).filter(|&u| self.degree(u) == 0))
    }

    /// Edge present iff absent in `self`; no loops.
    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let full = VertexSet::full(self.n);
        for u in 0..self.n {
            let w = self.words;
            for (k, word) in g.rows[u * w..(u + 1) * w].iter_mut().enumerate() {
                *word = !*word & full.words()[k];
            }
            g.rows[u * w + u / 64] &= !(1 << (u % 64));
        }
        g.refresh();
        g
    }

    /// Induced subgraph on `set`; vertex `i` of the result is the `i`-th
    /// smallest member of `set`.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        let members: Vec<usize> = set.iter().collect();
        let mut h = Graph::empty_with_cap(members.len(), HARD_MAX_N)?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.set_edge(i, j);
                }
            }
        }
        h.refresh();
        Ok(h)
    }

    /// Degree of `u` counted inside `set`.
    pub fn degree_within(&self, u: usize, set: &VertexSet) -> usize {
        self.row(u).iter().zip(set.words()).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Returns the graph with vertex `perm[i]` of `self` renamed to `i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut h = Graph::empty_with_cap(self.n, HARD_MAX_N)?;
        let mut inverse = vec![usize::MAX; self.n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= self.n {
                return Err(GraphError::EndpointOutOfRange { vertex: p, n: self.n });
            }
            inverse[p] = i;
        }
        for (u, v) in self.edges() {
            h.set_edge(inverse[u], inverse[v]);
        }
        h.refresh();
        Ok(h)
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for (u, v) in self.edges() {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = side[u] ^ 1;
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Recomputes every cached field from the adjacency rows and checks the
    /// structural invariants.
    pub fn check_invariants(&self) -> bool {
        let mut twice_m = 0;
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            let d: usize = self.row(u).iter().map(|w| w.count_ones() as usize).sum();
            if d != self.degree(u) {
                return false;
            }
            twice_m += d;
            for v in self.neighbors(u) {
                if v >= self.n || !self.has_edge(v, u) {
                    return false;
                }
            }
        }
        twice_m == 2 * self.m
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", emit_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_small_graphs() {
        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        assert!(k3.check_invariants());

        let e3 = Graph::from_edges(3, []).unwrap();
        assert_eq!(e3.m(), 0);
        assert!(e3.degrees().all(|d| d == 0));

        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.degrees().all(|d| d == 2));
    }

    #[test]
    fn duplicate_edges_are_merged() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::EndpointOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::from_edges(65, []), Err(GraphError::TooManyVertices { n: 65, cap: 64 }));
        assert!(Graph::from_edges_with_cap(65, [(0, 64)], 128).is_ok());
        assert_eq!(Graph::empty(0), Err(GraphError::NoVertices));
    }

    #[test]
    fn complement_examples() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(k4.complement().m(), 0);

        let c5 = cycle(5).unwrap();
        let cc5 = c5.complement();
        // 0-2-4-1-3-0 is the complement cycle
        let relabeled = cc5.relabel(&[0, 2, 4, 1, 3]).unwrap();
        assert_eq!(relabeled, c5);

        let k22 = complete_multipartite(&[2, 2], 0).unwrap();
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(k22.complement(), two_k2);
    }

    #[test]
    fn multi_word_complement() {
        let g = path(130).unwrap();
        let c = g.complement();
        assert!(c.check_invariants());
        for u in 0..130 {
            assert_eq!(c.degree(u), 129 - g.degree(u));
        }
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let c5 = cycle(5).unwrap();
        assert!(c5.is_connected() && !c5.is_bipartite());
        let c4 = cycle(4).unwrap();
        assert!(c4.is_connected() && c4.is_bipartite());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected() && two_k2.is_bipartite());
    }

    #[test]
    fn edge_mask_order_matches_graph6() {
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
        let g = Graph::from_edge_mask(3, 0b110).unwrap();
        assert!(!g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        assert_eq!(Graph::from_edge_mask(12, 0), Err(GraphError::MaskOrder(12)));
    }

    #[test]
    fn induced_subgraph() {
        let k4 = complete_graph(4).unwrap();
        let set = VertexSet::from_iter_n(4, [0, 2, 3]);
        let h = k4.induced(&set).unwrap();
        assert_eq!(h, complete_graph(3).unwrap());
        assert_eq!(k4.degree_within(1, &set), 3);
    }
}
