//! Adjacency spectra and clique statistics of small graphs, with
//! mechanical checkers for the inequalities that relate them.
//!
//! - [`graph`]: bit-row graphs, generators, graph6.
//! - [`spectral`]: Jacobi eigensolver, exact walk counts, walk-ratio limit.
//! - [`cliques`]: exact clique counts, Moon–Moser chain, recognizers.
//! - [`bounds`]: one evaluator per inequality, producing [`bounds::BoundReport`]s.
//! - [`stability`]: witness search for induced `r`-partite subgraphs.
//! - [`scan`]: corpus scans with deterministic parallel aggregation.

pub mod bounds;
pub mod cliques;
pub mod exact;
pub mod graph;
pub mod par;
pub mod scan;
pub mod spectral;
pub mod stability;
pub mod tol;

pub use bounds::{BoundReport, CheckError, GraphFacts, Params};
pub use exact::Alpha;
pub use graph::{Graph, GraphError, VertexSet};
pub use par::Jobs;
pub use tol::Tolerances;
