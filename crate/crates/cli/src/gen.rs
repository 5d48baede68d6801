use std::fs;

use serde::Serialize;

use scl_core::graph::{
    complete_graph, complete_multipartite, cycle, emit_graph6, path, random_graph, star, turan_graph,
};
use scl_core::scan::item_seed;
use scl_core::{Graph, GraphError};

use crate::args::{GenArgs, GenKind};
use crate::{print_json, vertex_cap, CmdResult, Failure, Status};

#[derive(Serialize)]
struct GenOutput<'a> {
    kind: &'a str,
    count: usize,
    graphs: Vec<String>,
}

fn petersen() -> Result<Graph, GraphError> {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges(10, edges)
}

fn named(name: &str, n: usize) -> Result<Graph, GraphError> {
    match name {
        "complete" => complete_graph(n),
        "cycle" => cycle(n),
        "path" => path(n),
        "star" => star(n.saturating_sub(1)),
        "empty" => Graph::empty(n),
        _ => unreachable!(),
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("missing --{flag}")))
}

fn generate(a: &GenArgs) -> Result<(&'static str, Vec<Graph>), Failure> {
    let bad = |e: GraphError| Failure::usage(e);
    let graphs = match a.kind {
        GenKind::Turan => ("turan", vec![turan_graph(need(a.r, "r")?, need(a.n, "n")?).map_err(bad)?]),
        GenKind::Multipartite => ("multipartite", vec![complete_multipartite(&a.parts, a.isolated).map_err(bad)?]),
        GenKind::Random => {
            let (n, p) = (need(a.n, "n")?, need(a.p, "p")?);
            let graphs: Result<Vec<_>, _> = (0..a.count).map(|i| random_graph(n, p, item_seed(a.seed, i))).collect();
            ("random", graphs.map_err(bad)?)
        }
        GenKind::Named => {
            let name = need(a.name.as_deref(), "name")?;
            let g = match name {
                "petersen" => petersen(),
                "complete" | "cycle" | "path" | "star" | "empty" => named(name, need(a.n, "n")?),
                other => return Err(Failure::usage(format!("unknown named graph `{other}`"))),
            };
            ("named", vec![g.map_err(bad)?])
        }
    };
    Ok(graphs)
}

pub fn run(a: &GenArgs) -> CmdResult {
    let cap = vertex_cap()?;
    let (kind, graphs) = generate(a)?;
    if let Some(g) = graphs.iter().find(|g| g.n() > cap) {
        return Err(Failure::usage(format!("order {} exceeds the vertex cap {cap}", g.n())));
    }
    let lines: Vec<String> = graphs.iter().map(emit_graph6).collect();
    if let Some(out) = &a.out {
        let mut text = lines.join("\n");
        text.push('\n');
        fs::write(out, text).map_err(|e| Failure::io(format!("{}: {e}", out.display())))?;
        eprintln!("wrote {} graph(s) to {}", lines.len(), out.display());
    }
    print_json(&GenOutput { kind, count: lines.len(), graphs: lines })?;
    Ok(Status::Ok)
}
