//! Virtual-real components, the `⊡` product, and smoothing of virtual
//! vertices with the matching lift of product paths.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{core_product, shape_of, PartRecord, ProductPath, Shape};
use crate::base::BaseDecomposition;
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::graph::{norm, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VRKind {
    Path,
    Cycle,
}

/// A path or cycle of `G` whose vertices are flagged real or virtual.
///
/// A cycle lists each vertex once; its closing edge joins the last vertex
/// to the first. A vertex may occur twice in a cycle only when both copies
/// are virtual (a split vertex).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VRComponent {
    pub kind: VRKind,
    pub vertices: Vec<Vertex>,
    pub real: Vec<bool>,
}

impl VRComponent {
    pub fn path(vertices: Vec<Vertex>, real: Vec<bool>) -> Result<Self> {
        let c = VRComponent { kind: VRKind::Path, vertices, real };
        c.validate()?;
        Ok(c)
    }

    pub fn cycle(vertices: Vec<Vertex>, real: Vec<bool>) -> Result<Self> {
        let c = VRComponent { kind: VRKind::Cycle, vertices, real };
        c.validate()?;
        Ok(c)
    }

    /// All-real component.
    pub fn all_real(kind: VRKind, vertices: Vec<Vertex>) -> Result<Self> {
        let real = vec![true; vertices.len()];
        let c = VRComponent { kind, vertices, real };
        c.validate()?;
        Ok(c)
    }

    pub fn real_count(&self) -> usize {
        self.real.iter().filter(|&&r| r).count()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as position pairs.
    pub fn position_edges(&self) -> Vec<(usize, usize)> {
        let l = self.vertices.len();
        let mut out: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
        if self.kind == VRKind::Cycle {
            out.push((l - 1, 0));
        }
        out
    }

    /// Edges as vertex pairs of `G`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.position_edges().into_iter().map(|(a, b)| norm(self.vertices[a], self.vertices[b])).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let l = self.vertices.len();
        let bad = |msg: String| Err(Error::InvalidComponent(msg));
        if self.real.len() != l {
            return bad(format!("{} vertices but {} flags", l, self.real.len()));
        }
        match self.kind {
            VRKind::Path => {
                if l < 2 {
                    return bad("a path needs at least one edge".into());
                }
                if !self.real[0] || !self.real[l - 1] {
                    return bad("both ends of a path must be real".into());
                }
            }
            VRKind::Cycle => {
                if l < 3 {
                    return bad("a cycle needs at least three vertices".into());
                }
                if self.real_count() < 3 {
                    return bad(format!("a cycle needs at least three real vertices, found {}", self.real_count()));
                }
            }
        }
        let mut seen: HashMap<Vertex, usize> = HashMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            if let Some(j) = seen.insert(v, i) {
                let split_ok = self.kind == VRKind::Cycle && !self.real[i] && !self.real[j];
                if !split_ok {
                    return bad(format!("vertex {v} repeats at positions {j} and {i}"));
                }
            }
        }
        let mut edges = self.edges();
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) || edges.iter().any(|&(a, b)| a == b) {
            return bad("component repeats an edge".into());
        }
        Ok(())
    }

    pub(crate) fn local(&self) -> Local {
        Local { labels: self.vertices.clone(), edges: self.position_edges(), real: self.real.clone() }
    }
}

/// `S ⊡ H` on position-major vertices `i * n(H) + h`: every column carries
/// the component, every real row carries a copy of `H`.
pub fn vr_product(s: &VRComponent, h: &Graph) -> Result<Graph> {
    s.validate()?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let nh = h.n();
    let mut edges = Vec::new();
    for (a, b) in s.position_edges() {
        for y in 0..nh {
            edges.push((a * nh + y, b * nh + y));
        }
    }
    for (i, &r) in s.real.iter().enumerate() {
        if r {
            edges.extend(h.edges().iter().map(|&(x, y)| (i * nh + x, i * nh + y)));
        }
    }
    Graph::new(s.len() * nh, edges)
}

/// A subgraph of `G` with its own local vertices: `labels[i]` is the vertex
/// of `G` that local vertex `i` stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Local {
    pub labels: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
    pub real: Vec<bool>,
}

/// Result of suppressing the virtual vertices of a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smoothing {
    /// The smoothed graph on the real vertices, in local order.
    pub graph: Graph,
    /// Local vertex (position) of each smoothed vertex.
    pub locals: Vec<usize>,
    /// For each smoothed edge `(a, b)` with `a < b`, the local vertices
    /// from `a` to `b` it stands for.
    pub expansion: HashMap<(Vertex, Vertex), Vec<usize>>,
    labels: Vec<Vertex>,
}

impl Smoothing {
    /// Label in `G` of a smoothed vertex.
    pub fn label(&self, v: Vertex) -> Vertex {
        self.labels[self.locals[v]]
    }

    /// Labels in `G` along the smoothed edge from `a` to `b`, both ends included.
    pub fn expand_edge(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let seq = &self.expansion[&norm(a, b)];
        let mut out: Vec<Vertex> = seq.iter().map(|&i| self.labels[i]).collect();
        if a > b {
            out.reverse();
        }
        out
    }

    /// Lifts a path of `smoothed □ H` to a path of `G □ H`.
    pub fn lift(&self, p: &ProductPath) -> ProductPath {
        let mut out: Vec<(Vertex, Vertex)> = Vec::with_capacity(p.vertices.len());
        let Some(&(g0, h0)) = p.vertices.first() else {
            return ProductPath { vertices: out };
        };
        out.push((self.label(g0), h0));
        for w in p.vertices.windows(2) {
            let ((a, ha), (b, hb)) = (w[0], w[1]);
            if ha == hb {
                out.extend(self.expand_edge(a, b).into_iter().skip(1).map(|g| (g, ha)));
            } else {
                out.push((self.label(b), hb));
            }
        }
        ProductPath { vertices: out }
    }
}

/// Suppresses the virtual vertices of `s`, which all have degree 2.
pub fn smooth(s: &VRComponent) -> Result<Smoothing> {
    s.validate()?;
    smooth_local(&s.local())
}

pub(crate) fn smooth_local(local: &Local) -> Result<Smoothing> {
    let k = local.labels.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(a, b) in &local.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for (i, nb) in adj.iter().enumerate().take(k) {
        if !local.real[i] && nb.len() != 2 {
            return Err(Error::InvalidComponent(format!(
                "virtual vertex {} has degree {} in its component",
                local.labels[i],
                nb.len()
            )));
        }
    }
    let locals: Vec<usize> = (0..k).filter(|&i| local.real[i]).collect();
    let index: HashMap<usize, usize> = locals.iter().enumerate().map(|(j, &i)| (i, j)).collect();
    let mut edges = Vec::new();
    let mut expansion = HashMap::new();
    let mut used = vec![false; local.edges.len()];
    let edge_id: HashMap<(usize, usize), usize> =
        local.edges.iter().enumerate().map(|(e, &(a, b))| (norm(a, b), e)).collect();
    for &start in &locals {
        for &first in &adj[start] {
            let e = edge_id[&norm(start, first)];
            if used[e] {
                continue;
            }
            used[e] = true;
            let mut seq = vec![start, first];
            let (mut prev, mut cur) = (start, first);
            while !local.real[cur] {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                used[edge_id[&norm(cur, next)]] = true;
                seq.push(next);
                prev = cur;
                cur = next;
                if seq.len() > k + 1 {
                    return Err(Error::InvalidComponent("virtual cycle without real vertices".into()));
                }
            }
            let (a, b) = (index[&start], index[&cur]);
            if a == b {
                return Err(Error::InvalidComponent(format!("smoothing leaves a loop at {}", local.labels[start])));
            }
            if a > b {
                seq.reverse();
            }
            if expansion.insert(norm(a, b), seq).is_some() {
                return Err(Error::InvalidComponent(format!(
                    "smoothing leaves parallel edges between {} and {}",
                    local.labels[locals[a]], local.labels[locals[b]]
                )));
            }
            edges.push((a, b));
        }
    }
    if used.iter().any(|&u| !u) {
        return Err(Error::InvalidComponent("a cycle of virtual vertices has no real vertex".into()));
    }
    let graph = Graph::new(locals.len(), edges)?;
    Ok(Smoothing { graph, locals, expansion, labels: local.labels.clone() })
}

/// Decomposes `local ⊡ H` through its smoothing: the smoothed graph must
/// have a product construction.
pub(crate) fn local_product(
    local: &Local,
    base: &BaseDecomposition,
) -> Result<(Vec<ProductPath>, Vec<PartRecord>, Shape)> {
    let sm = smooth_local(local)?;
    let class = classify(&sm.graph)?;
    let (shape, order) = shape_of(&class).ok_or_else(|| {
        Error::InvalidComponent(format!("smoothed component is {}, which has no construction", class.tag()))
    })?;
    let (paths, parts) = core_product(shape, sm.graph.n(), base)?;
    let lifted = paths
        .into_iter()
        .map(|p| {
            let on_core = ProductPath { vertices: p.vertices.into_iter().map(|(u, y)| (order[u], y)).collect() };
            sm.lift(&on_core)
        })
        .collect();
    Ok((lifted, parts, shape))
}

/// Checks that the pieces partition `E(G)` and that every vertex of `G` is
/// real in exactly one place.
pub(crate) fn check_cover(g: &Graph, pieces: &[Local]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidPlan(msg));
    let mut owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut real_at: Vec<Option<usize>> = vec![None; g.n()];
    for (i, p) in pieces.iter().enumerate() {
        for &(a, b) in &p.edges {
            let (x, y) = (p.labels[a], p.labels[b]);
            if x >= g.n() || y >= g.n() || !g.has_edge(x, y) {
                return bad(format!("piece {i} uses {x}-{y}, which is not an edge"));
            }
            if let Some(j) = owner.insert(norm(x, y), i) {
                return bad(format!("edge {x}-{y} lies in pieces {j} and {i}"));
            }
        }
        for (k, &v) in p.labels.iter().enumerate() {
            if p.real[k] {
                if let Some(j) = real_at[v].replace(i) {
                    return bad(format!("vertex {v} is real in pieces {j} and {i}"));
                }
            }
        }
    }
    if let Some(&(a, b)) = g.edges().iter().find(|e| !owner.contains_key(e)) {
        return bad(format!("edge {a}-{b} is in no piece"));
    }
    if let Some(v) = (0..g.n()).find(|&v| real_at[v].is_none()) {
        return bad(format!("vertex {v} is real nowhere"));
    }
    Ok(())
}

/// Decomposes `G □ H` from virtual-real components partitioning `E(G)`,
/// one smoothed product per component.
pub fn vr_product_decompose(
    g: &Graph,
    components: &[VRComponent],
    h: &Graph,
    base: &BaseDecomposition,
) -> Result<super::ProductDecomposition> {
    for c in components {
        c.validate()?;
    }
    let locals: Vec<Local> = components.iter().map(VRComponent::local).collect();
    check_cover(g, &locals)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut paths = Vec::new();
    let mut parts = Vec::new();
    for l in &locals {
        let (p, r, _) = local_product(l, base)?;
        paths.extend(p);
        parts.extend(r);
    }
    Ok(super::ProductDecomposition::new(paths, "vr_product", parts))
}
