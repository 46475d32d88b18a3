//! Plans: edge partitions of `G` into virtual-real paths, virtual-real
//! cycles and special subgraphs, with a real vertex assignment.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::base::BaseDecomposition;
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::graph::{norm, Graph, Vertex};
use crate::product::vr::{check_cover, local_product, smooth_local, Local};
use crate::product::{shape_of, ProductDecomposition, VRComponent, VRKind};

/// The arc `C_{from,to}`: the cycle walked forward from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleArc {
    pub cycle: Vec<Vertex>,
    pub from: Vertex,
    pub to: Vertex,
    pub vertices: Vec<Vertex>,
}

impl CycleArc {
    pub fn new(cycle: &[Vertex], from: Vertex, to: Vertex) -> Result<Self> {
        let pos = |v: Vertex| {
            cycle
                .iter()
                .position(|&x| x == v)
                .ok_or_else(|| Error::InvalidPlan(format!("{v} is not on the cycle {cycle:?}")))
        };
        let (i, j) = (pos(from)?, pos(to)?);
        if i == j {
            return Err(Error::InvalidPlan(format!("arc from {from} to itself")));
        }
        let l = cycle.len();
        let mut vertices = vec![cycle[i]];
        let mut k = i;
        while k != j {
            k = (k + 1) % l;
            vertices.push(cycle[k]);
        }
        Ok(CycleArc { cycle: cycle.to_vec(), from, to, vertices })
    }

    /// `C_{to,from}`: the rest of the cycle.
    pub fn complement(&self) -> CycleArc {
        CycleArc::new(&self.cycle, self.to, self.from).expect("ends lie on the cycle")
    }
}

pub(crate) fn arc(cycle: &[Vertex], from: Vertex, to: Vertex) -> Result<Vec<Vertex>> {
    Ok(CycleArc::new(cycle, from, to)?.vertices)
}

/// Concatenates walks that meet end to end, reversing pieces as needed.
pub(crate) fn chain(parts: &[&[Vertex]]) -> Result<Vec<Vertex>> {
    let parts: Vec<&[Vertex]> = parts.iter().copied().filter(|p| p.len() > 1).collect();
    let Some(first) = parts.first() else {
        return Err(Error::InvalidPlan("nothing to chain".into()));
    };
    let mut out: Vec<Vertex> = first.to_vec();
    if let Some(next) = parts.get(1) {
        let (a, b) = (next[0], next[next.len() - 1]);
        if out[out.len() - 1] != a && out[out.len() - 1] != b {
            out.reverse();
        }
    }
    for p in &parts[1..] {
        let end = out[out.len() - 1];
        if p[0] == end {
            out.extend_from_slice(&p[1..]);
        } else if p[p.len() - 1] == end {
            out.extend(p.iter().rev().skip(1));
        } else {
            return Err(Error::InvalidPlan(format!("walk {p:?} does not meet {end}")));
        }
    }
    Ok(out)
}

/// A special subgraph handed to a family construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPiece {
    pub edges: Vec<(Vertex, Vertex)>,
    /// Vertices of the subgraph that are real on it.
    pub real: Vec<Vertex>,
    /// Family of the smoothed subgraph.
    pub family: String,
}

impl SpecialPiece {
    fn local(&self) -> Local {
        let verts: BTreeSet<Vertex> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        let labels: Vec<Vertex> = verts.into_iter().collect();
        let idx: HashMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let real = labels.iter().map(|v| self.real.contains(v)).collect();
        let edges = self.edges.iter().map(|&(a, b)| (idx[&a], idx[&b])).collect();
        Local { labels, edges, real }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "piece", rename_all = "snake_case")]
pub enum Piece {
    Component(VRComponent),
    Special(SpecialPiece),
}

impl Piece {
    fn local(&self) -> Local {
        match self {
            Piece::Component(c) => c.local(),
            Piece::Special(s) => s.local(),
        }
    }

    pub fn real_count(&self) -> usize {
        match self {
            Piece::Component(c) => c.real_count(),
            Piece::Special(s) => s.real.len(),
        }
    }
}

/// A plan for `G`, tagged with the proof branch that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VRPlan {
    pub pieces: Vec<Piece>,
    pub provenance: String,
}

impl VRPlan {
    pub fn components(&self) -> impl Iterator<Item = &VRComponent> {
        self.pieces.iter().filter_map(|p| match p {
            Piece::Component(c) => Some(c),
            Piece::Special(_) => None,
        })
    }

    /// Checks the partition, the real assignment and that every piece
    /// smooths to a graph with a product construction.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for p in &self.pieces {
            if let Piece::Component(c) = p {
                c.validate()?;
            }
            piece_shape(&p.local())?;
        }
        let locals: Vec<Local> = self.pieces.iter().map(Piece::local).collect();
        check_cover(g, &locals)
    }

    /// Decomposes `G □ H` piece by piece.
    pub fn product(&self, g: &Graph, base: &BaseDecomposition) -> Result<ProductDecomposition> {
        self.validate(g)?;
        let mut paths = Vec::new();
        let mut parts = Vec::new();
        for p in &self.pieces {
            let (ps, rs, _) = local_product(&p.local(), base)?;
            paths.extend(ps);
            parts.extend(rs);
        }
        Ok(ProductDecomposition::new(paths, self.provenance.clone(), parts))
    }
}

fn piece_shape(local: &Local) -> Result<String> {
    let sm = smooth_local(local)?;
    let class = classify(&sm.graph)?;
    match shape_of(&class) {
        Some((shape, _)) => Ok(shape.name().to_string()),
        None => Err(Error::InvalidPlan(format!("a piece smooths to a {} graph", class.tag()))),
    }
}

/// A piece before real vertices are chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Draft {
    Path(Vec<Vertex>),
    Cycle(Vec<Vertex>),
    /// Union of the edges of the listed walks.
    Special(Vec<Vec<Vertex>>),
}

impl Draft {
    fn local(&self) -> Local {
        match self {
            Draft::Path(v) => {
                let edges = (1..v.len()).map(|i| (i - 1, i)).collect();
                Local { labels: v.clone(), edges, real: vec![false; v.len()] }
            }
            Draft::Cycle(v) => {
                let l = v.len();
                let mut edges: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
                edges.push((l - 1, 0));
                Local { labels: v.clone(), edges, real: vec![false; l] }
            }
            Draft::Special(walks) => {
                let mut set: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
                for w in walks {
                    for e in w.windows(2) {
                        set.insert(norm(e[0], e[1]));
                    }
                }
                let sp = SpecialPiece { edges: set.into_iter().collect(), real: Vec::new(), family: String::new() };
                sp.local()
            }
        }
    }

    /// Lower ranks are preferred when a vertex may be real in several pieces.
    fn rank(&self) -> usize {
        match self {
            Draft::Special(_) => 0,
            Draft::Cycle(_) => 1,
            Draft::Path(_) => 2,
        }
    }
}

const ASSIGN_LEAVES: usize = 20_000;

/// Chooses real vertices for the drafts and returns the validated plan.
///
/// A vertex is real where its degree in a piece is not 2; otherwise it is
/// real on a special subgraph or cycle if that keeps every piece valid,
/// else on a path.
pub(crate) fn realize(g: &Graph, drafts: Vec<Draft>, provenance: &str) -> Result<VRPlan> {
    let mut locals: Vec<Local> = drafts.iter().map(Draft::local).collect();
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for (p, l) in locals.iter().enumerate() {
        for (i, &v) in l.labels.iter().enumerate() {
            if v >= g.n() {
                return Err(Error::InvalidPlan(format!("vertex {v} out of range")));
            }
            occ[v].push((p, i));
        }
    }
    let degree = |l: &Local, i: usize| l.edges.iter().filter(|&&(a, b)| a == i || b == i).count();
    let mut free: Vec<Vec<(usize, usize)>> = Vec::new();
    for (v, list) in occ.iter().enumerate() {
        let split = |p: usize| list.iter().filter(|&&(q, _)| q == p).count() > 1;
        let forced: Vec<(usize, usize)> = list.iter().copied().filter(|&(p, i)| degree(&locals[p], i) != 2).collect();
        match forced.len() {
            0 => {
                let mut cands: Vec<(usize, usize)> = list.iter().copied().filter(|&(p, _)| !split(p)).collect();
                cands.sort_by_key(|&(p, _)| (drafts[p].rank(), p));
                if cands.is_empty() {
                    return Err(Error::InvalidPlan(format!("vertex {v} cannot be real anywhere")));
                }
                free.push(cands);
            }
            1 => {
                let (p, i) = forced[0];
                if split(p) {
                    return Err(Error::InvalidPlan(format!("split vertex {v} is an end in piece {p}")));
                }
                locals[p].real[i] = true;
            }
            _ => {
                return Err(Error::InvalidPlan(format!(
                    "vertex {v} must be real in pieces {} and {}",
                    forced[0].0, forced[1].0
                )))
            }
        }
    }
    let mut leaves = 0;
    if !choose(&drafts, &mut locals, &free, 0, &mut leaves) {
        return Err(Error::InvalidPlan(format!("no valid real assignment for {provenance}")));
    }
    let pieces = drafts
        .iter()
        .zip(&locals)
        .map(|(d, l)| -> Result<Piece> {
            Ok(match d {
                Draft::Path(v) => {
                    Piece::Component(VRComponent { kind: VRKind::Path, vertices: v.clone(), real: l.real.clone() })
                }
                Draft::Cycle(v) => {
                    Piece::Component(VRComponent { kind: VRKind::Cycle, vertices: v.clone(), real: l.real.clone() })
                }
                Draft::Special(_) => {
                    let verts: BTreeSet<Vertex> =
                        l.edges.iter().flat_map(|&(a, b)| [l.labels[a], l.labels[b]]).collect();
                    let real: Vec<Vertex> = (0..l.labels.len()).filter(|&i| l.real[i]).map(|i| l.labels[i]).collect();
                    let edges = l.edges.iter().map(|&(a, b)| norm(l.labels[a], l.labels[b])).collect();
                    debug_assert!(real.iter().all(|v| verts.contains(v)));
                    Piece::Special(SpecialPiece { edges, real, family: piece_shape(l)? })
                }
            })
        })
        .collect::<Result<Vec<Piece>>>()?;
    let plan = VRPlan { pieces, provenance: provenance.to_string() };
    plan.validate(g)?;
    Ok(plan)
}

fn piece_ok(d: &Draft, l: &Local) -> bool {
    match d {
        Draft::Path(v) => {
            let c = VRComponent { kind: VRKind::Path, vertices: v.clone(), real: l.real.clone() };
            c.validate().is_ok()
        }
        Draft::Cycle(v) => {
            let c = VRComponent { kind: VRKind::Cycle, vertices: v.clone(), real: l.real.clone() };
            c.validate().is_ok() && piece_shape(l).is_ok()
        }
        Draft::Special(_) => piece_shape(l).is_ok(),
    }
}

fn choose(drafts: &[Draft], locals: &mut [Local], free: &[Vec<(usize, usize)>], k: usize, leaves: &mut usize) -> bool {
    if k == free.len() {
        *leaves += 1;
        return drafts.iter().zip(locals.iter()).all(|(d, l)| piece_ok(d, l));
    }
    for &(p, i) in &free[k] {
        if *leaves >= ASSIGN_LEAVES {
            return false;
        }
        locals[p].real[i] = true;
        if choose(drafts, locals, free, k + 1, leaves) {
            return true;
        }
        locals[p].real[i] = false;
    }
    false
}

/// Replaces `v` by two nonadjacent vertices: `v` keeps the neighbours in
/// `keep`, a new vertex `n(G)` takes those in `moved`.
pub fn split_vertex(g: &Graph, v: Vertex, keep: &[Vertex], moved: &[Vertex]) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut all: Vec<Vertex> = keep.iter().chain(moved).copied().collect();
    all.sort_unstable();
    let len = all.len();
    all.dedup();
    if all.len() != len || all.as_slice() != g.neighbors(v) {
        return Err(Error::Usage(format!("the two sides must partition the neighbours of {v}")));
    }
    let fresh = g.n();
    let edges = g.edges().iter().map(|&(a, b)| {
        if a == v && moved.contains(&b) {
            (b, fresh)
        } else if b == v && moved.contains(&a) {
            (a, fresh)
        } else {
            (a, b)
        }
    });
    Graph::new(g.n() + 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_split_the_cycle() {
        let c = [0, 1, 2, 3, 4];
        let a = CycleArc::new(&c, 1, 3).unwrap();
        assert_eq!(a.vertices, vec![1, 2, 3]);
        assert_eq!(a.complement().vertices, vec![3, 4, 0, 1]);
    }

    #[test]
    fn chain_orients_parts() {
        let p = chain(&[&[5, 1], &[7, 8]]).unwrap_err();
        assert!(matches!(p, Error::InvalidPlan(_)));
        assert_eq!(chain(&[&[5, 1], &[3, 2, 1], &[3, 9]]).unwrap(), vec![5, 1, 2, 3, 9]);
        assert_eq!(chain(&[&[1, 5], &[1, 2]]).unwrap(), vec![5, 1, 2]);
    }

    #[test]
    fn split_examples() {
        let p3 = Graph::path(3);
        let cut = split_vertex(&p3, 1, &[0], &[2]).unwrap();
        assert_eq!((cut.n(), cut.m()), (4, 2));
        assert!(!cut.is_connected());
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let c6 = split_vertex(&bowtie, 0, &[1, 3], &[2, 4]).unwrap();
        assert!(matches!(classify(&c6).unwrap(), crate::classify::StructureClass::Cycle { .. }));
        assert!(!split_vertex(&bowtie, 0, &[1, 2], &[3, 4]).unwrap().is_connected());
        let side = split_vertex(&p3, 1, &[0, 2], &[]).unwrap();
        assert_eq!(side.degree(3), 0);
        assert!(split_vertex(&p3, 1, &[0], &[]).is_err());
    }

    #[test]
    fn realize_prefers_cycles() {
        // C4 with a pendant path through vertex 0
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let plan = realize(&g, vec![Draft::Cycle(vec![0, 1, 2, 3]), Draft::Path(vec![0, 4, 5])], "t").unwrap();
        assert_eq!(plan.pieces[0].real_count(), 3);
        assert_eq!(plan.pieces[1].real_count(), 3);
    }
}
