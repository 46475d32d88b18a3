//! Graphviz export of product decompositions.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::product::ProductDecomposition;

const PALETTE: [&str; 10] =
    ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];

/// Edge of a product graph between `(g, h)` pairs.
pub type ProductEdge = ((Vertex, Vertex), (Vertex, Vertex));

fn key(a: (Vertex, Vertex), b: (Vertex, Vertex)) -> ProductEdge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Writes `G □ H` with each edge labelled by the path that covers it.
/// Edges no path covers get `path=-1`.
pub fn product_dot(g: &Graph, h: &Graph, d: &ProductDecomposition) -> String {
    let mut owner = std::collections::HashMap::new();
    for (i, p) in d.paths.iter().enumerate() {
        for w in p.vertices.windows(2) {
            owner.insert(key(w[0], w[1]), i);
        }
    }
    let mut out = String::new();
    writeln!(out, "graph product {{").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for u in 0..g.n() {
        for y in 0..h.n() {
            writeln!(out, "  \"{u},{y}\";").unwrap();
        }
    }
    let mut edges: Vec<ProductEdge> = Vec::new();
    for u in 0..g.n() {
        for &(a, b) in h.edges() {
            edges.push(((u, a), (u, b)));
        }
    }
    for &(a, b) in g.edges() {
        for y in 0..h.n() {
            edges.push(((a, y), (b, y)));
        }
    }
    edges.sort_unstable();
    for (s, t) in edges {
        match owner.get(&key(s, t)) {
            Some(&i) => writeln!(
                out,
                "  \"{},{}\" -- \"{},{}\" [path={i}, color=\"{}\"];",
                s.0,
                s.1,
                t.0,
                t.1,
                PALETTE[i % PALETTE.len()]
            )
            .unwrap(),
            None => writeln!(out, "  \"{},{}\" -- \"{},{}\" [path=-1, style=dashed];", s.0, s.1, t.0, t.1).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

fn pair(tok: &str) -> Result<(Vertex, Vertex)> {
    let bad = || Error::Parse { line: 0, msg: format!("bad node {tok}") };
    let (a, b) = tok.trim().trim_matches('"').split_once(',').ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

/// Reads back the edges written by [`product_dot`] with their `path` attribute.
pub fn parse_product_dot(text: &str) -> Result<Vec<(ProductEdge, i64)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let Some((lhs, rest)) = line.split_once("--") else {
            continue;
        };
        let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
        let (rhs, attrs) = rest.split_once('[').ok_or_else(|| err("missing attributes"))?;
        let path = attrs
            .split(',')
            .find_map(|kv| kv.trim().strip_prefix("path="))
            .ok_or_else(|| err("missing path attribute"))?;
        let path: i64 = path.trim_end_matches(['[', ']', ';']).parse().map_err(|_| err("bad path attribute"))?;
        out.push(((pair(lhs)?, pair(rhs)?), path));
    }
    Ok(out)
}
