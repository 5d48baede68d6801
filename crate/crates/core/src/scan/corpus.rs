use std::fs;
use std::path::PathBuf;

use crate::cliques::is_kfree;
use crate::graph::{parse_graph6_with_cap, random_graph, Graph, DEFAULT_MAX_N};

use super::ScanError;

/// Largest exhaustive order without the override.
pub const EXHAUSTIVE_MAX_N: usize = 7;
/// Largest exhaustive order with the override.
pub const EXHAUSTIVE_OVERRIDE_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSource {
    /// All `2^(n(n−1)/2)` labeled graphs on `n` vertices, in edge-mask order.
    Exhaustive {
        n: usize,
        allow_n8: bool,
    },
    /// graph6 file, one graph per line, `#` comments and blank lines skipped.
    Graph6File(PathBuf),
    /// Item `i` is `G(n, p)` seeded with `mix(seed, i)`.
    Random {
        n: usize,
        p: f64,
        count: u64,
        seed: u64,
    },
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Connected,
    NonBipartite,
    /// No clique on this many vertices.
    KFree(usize),
}

impl Filter {
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            Filter::Connected => g.is_connected(),
            Filter::NonBipartite => !g.is_bipartite(),
            Filter::KFree(k) => is_kfree(g, k),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    pub filters: Vec<Filter>,
    /// Vertex cap for graph6 ingestion.
    pub max_n: usize,
}

impl CorpusSpec {
    pub fn new(source: CorpusSource) -> Self {
        CorpusSpec { source, filters: Vec::new(), max_n: DEFAULT_MAX_N }
    }

    pub fn with_filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of random corpus item `index`.
pub fn item_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ index)
}

/// A materialized, randomly addressable corpus.
pub(crate) enum Corpus {
    Exhaustive { n: usize, total: u64 },
    Listed(Vec<Graph>),
    Random { n: usize, p: f64, count: u64, seed: u64 },
}

impl Corpus {
    pub(crate) fn open(spec: &CorpusSpec) -> Result<Self, ScanError> {
        match &spec.source {
            &CorpusSource::Exhaustive { n, allow_n8 } => {
                let limit = if allow_n8 { EXHAUSTIVE_OVERRIDE_MAX_N } else { EXHAUSTIVE_MAX_N };
                if n == 0 || n > limit {
                    return Err(ScanError::ExhaustiveOrder { n, limit });
                }
                Ok(Corpus::Exhaustive { n, total: 1 << (n * (n - 1) / 2) })
            }
            CorpusSource::Graph6File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| ScanError::Io { path: path.clone(), message: e.to_string() })?;
                let graphs = parse_graph6_lines(&text, spec.max_n).map_err(|(line, message)| ScanError::Ingest {
                    path: path.clone(),
                    line,
                    message,
                })?;
                Ok(Corpus::Listed(graphs))
            }
            &CorpusSource::Random { n, p, count, seed } => {
                random_graph(n, p, 0).map_err(|e| ScanError::Corpus(e.to_string()))?;
                Ok(Corpus::Random { n, p, count, seed })
            }
            CorpusSource::Graphs(graphs) => Ok(Corpus::Listed(graphs.clone())),
        }
    }

    pub(crate) fn len(&self) -> u64 {
        match self {
            Corpus::Exhaustive { total, .. } => *total,
            Corpus::Listed(graphs) => graphs.len() as u64,
            Corpus::Random { count, .. } => *count,
        }
    }

    pub(crate) fn get(&self, i: u64) -> Graph {
        match self {
            Corpus::Exhaustive { n, .. } => Graph::from_edge_mask(*n, i).expect("exhaustive order checked on open"),
            Corpus::Listed(graphs) => graphs[i as usize].clone(),
            Corpus::Random { n, p, seed, .. } => {
                random_graph(*n, *p, item_seed(*seed, i)).expect("random parameters checked on open")
            }
        }
    }
}

/// Parses graph6 lines, skipping blanks and `#` comments. Errors carry the
/// 1-based line number.
pub fn parse_graph6_lines(text: &str, max_n: usize) -> Result<Vec<Graph>, (usize, String)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| parse_graph6_with_cap(l.trim(), max_n).map_err(|e| (i + 1, e.to_string())))
        .collect()
}

/// Every labeled graph on `n ≤ 8` vertices, in edge-mask order.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, ScanError> {
    if n == 0 || n > EXHAUSTIVE_OVERRIDE_MAX_N {
        return Err(ScanError::ExhaustiveOrder { n, limit: EXHAUSTIVE_OVERRIDE_MAX_N });
    }
    let total = 1u64 << (n * (n - 1) / 2);
    Ok((0..total).map(move |mask| Graph::from_edge_mask(n, mask).expect("order checked")))
}
