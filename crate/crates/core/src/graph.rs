//! Simple undirected graphs on dense vertex identifiers `0..n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A finite simple undirected graph.
///
/// Edges are stored normalized as `(a, b)` with `a < b`, sorted, and the
/// adjacency lists are sorted ascending. Values are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges }
    }
}

/// Counts of odd- and even-degree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityProfile {
    pub n_odd: usize,
    pub n_even: usize,
}

#[inline]
pub fn norm(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range ends.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if !set.insert(norm(a, b)) {
                let (x, y) = norm(a, b);
                return Err(Error::DuplicateEdge(x, y));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn is_odd(&self, v: Vertex) -> bool {
        self.degree(v) % 2 == 1
    }

    pub fn parity_profile(&self) -> ParityProfile {
        let n_odd = (0..self.n).filter(|&v| self.is_odd(v)).count();
        ParityProfile { n_odd, n_even: self.n - n_odd }
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Same vertex set, with the listed edges removed (missing edges are ignored).
    pub fn without_edges(&self, remove: &[(Vertex, Vertex)]) -> Graph {
        let drop: BTreeSet<_> = remove.iter().map(|&(a, b)| norm(a, b)).collect();
        let kept = self.edges.iter().copied().filter(|e| !drop.contains(e)).collect();
        Self::from_sorted(self.n, kept)
    }

    /// Image of the graph under the vertex map `v -> perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Self::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
            .expect("relabeling a simple graph by a permutation stays simple")
    }

    /// Adds one new vertex joined to each listed neighbor.
    pub fn with_new_vertex(&self, neighbors: &[Vertex]) -> Result<Graph> {
        let v = self.n;
        Graph::new(self.n + 1, self.edges.iter().copied().chain(neighbors.iter().map(|&u| (u, v))))
    }

    /// Parses the line-oriented edge-list format.
    ///
    /// Lines are `a b`; blank lines and lines starting with `#` are skipped;
    /// a leading `n <count>` line declares the vertex count (isolated
    /// vertices allowed). Without it the count is `1 + max id`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared = None;
        let mut edges = Vec::new();
        let mut seen_data = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "n" {
                if seen_data || declared.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "header `n <count>` must be the first data line".into(),
                    });
                }
                if tokens.len() != 2 {
                    return Err(Error::Parse { line: line_no, msg: "expected `n <count>`".into() });
                }
                let count = tokens[1]
                    .parse::<usize>()
                    .map_err(|e| Error::Parse { line: line_no, msg: format!("bad vertex count: {e}") })?;
                declared = Some(count);
                continue;
            }
            seen_data = true;
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two vertex ids, found {} tokens", tokens.len()),
                });
            }
            let mut ends = [0usize; 2];
            for (slot, tok) in ends.iter_mut().zip(&tokens) {
                *slot = tok
                    .parse::<usize>()
                    .map_err(|e| Error::Parse { line: line_no, msg: format!("bad vertex id `{tok}`: {e}") })?;
            }
            edges.push((ends[0], ends[1]));
        }
        let max_id = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        let n = match declared {
            Some(n) if n < max_id => {
                return Err(Error::VertexOutOfRange { vertex: max_id - 1, n });
            }
            Some(n) => n,
            None => max_id,
        };
        Graph::new(n, edges)
    }

    /// Serializes to the edge-list format: header line then sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        for &(a, b) in &self.edges {
            writeln!(out, "{a} {b}").unwrap();
        }
        out
    }

    /// Reads a single graph6 record (without the optional `>>graph6<<` header).
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let bytes: Vec<u8> = text.trim().bytes().collect();
        let err = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(err("graph6 bytes must lie in 63..=126"));
        }
        let (n, rest) = match bytes.first() {
            None => return Err(err("empty graph6 string")),
            Some(&126) => {
                if bytes.get(1) == Some(&126) {
                    if bytes.len() < 8 {
                        return Err(err("truncated graph6 size"));
                    }
                    let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
                    (n, &bytes[8..])
                } else {
                    if bytes.len() < 4 {
                        return Err(err("truncated graph6 size"));
                    }
                    let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
                    (n, &bytes[4..])
                }
            }
            Some(&b) => ((b - 63) as usize, &bytes[1..]),
        };
        let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if rest.len() < needed {
            return Err(err("truncated graph6 adjacency data"));
        }
        let mut edges = Vec::new();
        let mut bit = 0usize;
        for b in 1..n {
            for a in 0..b {
                let byte = rest[bit / 6] - 63;
                if byte & (1 << (5 - bit % 6)) != 0 {
                    edges.push((a, b));
                }
                bit += 1;
            }
        }
        Graph::new(n, edges)
    }

    /// Cartesian product `self □ other`; vertex `(g, h)` has index `g * other.n() + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nh = other.n;
        let mut edges = Vec::with_capacity(self.n * other.m() + nh * self.m());
        for g in 0..self.n {
            for &(a, b) in &other.edges {
                edges.push((pair_index(g, a, nh), pair_index(g, b, nh)));
            }
        }
        for &(a, b) in &self.edges {
            for h in 0..nh {
                edges.push((pair_index(a, h, nh), pair_index(b, h, nh)));
            }
        }
        Graph::new(self.n * nh, edges).expect("product of simple graphs is simple")
    }
}

/// Index of the product vertex `(g, h)` when the right factor has `n_h` vertices.
#[inline]
pub fn pair_index(g: Vertex, h: Vertex, n_h: usize) -> Vertex {
    g * n_h + h
}

/// Inverse of [`pair_index`].
#[inline]
pub fn pair_of(index: Vertex, n_h: usize) -> (Vertex, Vertex) {
    (index / n_h, index % n_h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path_and_k4() {
        let p3 = Graph::parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        let k4 = Graph::parse_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        assert_eq!(k4, Graph::complete(4));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::parse_edge_list("0 0"), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::parse_edge_list("0 1\n1 0"), Err(Error::DuplicateEdge(0, 1)));
        match Graph::parse_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Graph::parse_edge_list("0 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(Graph::parse_edge_list("n 2\n0 5").is_err());
    }

    #[test]
    fn header_and_comments() {
        let g = Graph::parse_edge_list("# comment\nn 5\n0 1\n\n# x\n3 4\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 2));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn parity_profiles() {
        let p = |g: &Graph| {
            let pp = g.parity_profile();
            (pp.n_odd, pp.n_even)
        };
        assert_eq!(p(&Graph::complete(4)), (4, 0));
        assert_eq!(p(&Graph::complete(5)), (0, 5));
        assert_eq!(p(&Graph::path(3)), (2, 1));
    }

    #[test]
    fn products() {
        let sq = Graph::path(2).cartesian_product(&Graph::path(2));
        assert_eq!((sq.n(), sq.m()), (4, 4));
        assert!((0..4).all(|v| sq.degree(v) == 2));
        let h = Graph::cycle(5);
        assert_eq!(Graph::path(1).cartesian_product(&h), h);
        let g = Graph::path(3).cartesian_product(&Graph::cycle(4));
        assert_eq!((g.n(), g.m()), (12, 20));
        let idx = pair_index(2, 3, 4);
        assert_eq!(pair_of(idx, 4), (2, 3));
    }

    #[test]
    fn graph6_reader() {
        assert_eq!(Graph::parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(Graph::parse_graph6("Dhc").unwrap(), Graph::cycle(5));
        assert!(Graph::parse_graph6("").is_err());
    }
}
