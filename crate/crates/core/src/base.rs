//! Path decompositions of a connected graph `H` in which every odd vertex
//! ends exactly one path and every even vertex ends exactly two, grouped
//! into odd-odd paths, open trails and closed trails.
//!
//! The decomposition is found by choosing, at every vertex, which incident
//! edges are joined into pass-through transitions (`(d-1)/2` of them at an
//! odd vertex, `(d-2)/2` at an even one). Any such transition system splits
//! `E(H)` into trails with the right end multiplicities; a backtracking
//! search keeps only systems whose trails are simple paths.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{norm, Graph, Vertex};

/// Default node budget of the transition search.
pub const DEFAULT_BASE_BUDGET: u64 = 2_000_000;

/// One path of the decomposition, as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePath {
    pub vertices: Vec<Vertex>,
}

impl BasePath {
    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Parities (true = odd) of the two end vertices in `h`.
    pub fn end_parity(&self, h: &Graph) -> (bool, bool) {
        (h.is_odd(self.first()), h.is_odd(self.last()))
    }

    pub fn reversed(&self) -> BasePath {
        let mut v = self.vertices.clone();
        v.reverse();
        BasePath { vertices: v }
    }
}

/// A chain of legs glued end to end at pairwise distinct junctions.
///
/// `junctions[k]` and `junctions[k + 1]` are the ends of `legs[k]`, which is
/// stored oriented from the former to the latter. For a closed trail the
/// last junction repeats the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailGroup {
    pub closed: bool,
    pub legs: Vec<BasePath>,
    pub junctions: Vec<Vertex>,
}

impl TrailGroup {
    pub fn r(&self) -> usize {
        self.legs.len()
    }

    fn from_legs(legs: Vec<BasePath>, closed: bool) -> Self {
        let mut junctions = vec![legs[0].first()];
        junctions.extend(legs.iter().map(BasePath::last));
        TrailGroup { closed, legs, junctions }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum GroupId {
    OddOdd(usize),
    Open(usize),
    Closed(usize),
}

/// Where a vertex of `H` is real: the group, and the leg of that group
/// having the vertex as an end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealSlot {
    pub group: GroupId,
    pub leg: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BaseStats {
    pub n_o1: usize,
    pub n_o2: usize,
    pub n_e1: usize,
    pub n_e2: usize,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseDecomposition {
    pub odd_odd: Vec<BasePath>,
    pub open_trails: Vec<TrailGroup>,
    pub closed_trails: Vec<TrailGroup>,
    pub real_assignment: Vec<RealSlot>,
    pub stats: BaseStats,
}

/// A component handed to the product constructions: the odd-odd paths are
/// open trails with a single leg.
#[derive(Debug, Clone, Copy)]
pub enum Component<'a> {
    OddOdd(&'a BasePath),
    Trail(&'a TrailGroup),
}

impl BaseDecomposition {
    pub fn path_count(&self) -> usize {
        self.odd_odd.len()
            + self.open_trails.iter().map(TrailGroup::r).sum::<usize>()
            + self.closed_trails.iter().map(TrailGroup::r).sum::<usize>()
    }

    /// Every leg, in group order.
    pub fn all_legs(&self) -> impl Iterator<Item = &BasePath> {
        self.odd_odd
            .iter()
            .chain(self.open_trails.iter().flat_map(|t| t.legs.iter()))
            .chain(self.closed_trails.iter().flat_map(|t| t.legs.iter()))
    }

    pub fn components(&self) -> impl Iterator<Item = Component<'_>> {
        self.odd_odd
            .iter()
            .map(Component::OddOdd)
            .chain(self.open_trails.iter().map(Component::Trail))
            .chain(self.closed_trails.iter().map(Component::Trail))
    }

    /// Leg paths of a group.
    pub fn group_legs(&self, id: GroupId) -> &[BasePath] {
        match id {
            GroupId::OddOdd(i) => std::slice::from_ref(&self.odd_odd[i]),
            GroupId::Open(i) => &self.open_trails[i].legs,
            GroupId::Closed(i) => &self.closed_trails[i].legs,
        }
    }
}

/// Computes the decomposition for a connected graph with at least one edge.
pub fn gallai_base_decomposition(h: &Graph) -> Result<BaseDecomposition> {
    nth_base_decomposition(h, 0, DEFAULT_BASE_BUDGET)
}

/// Number of candidate transition systems ranked before picking one.
const CANDIDATES: usize = 64;

/// The `rank`-th decomposition among the ranked candidates (0 = the
/// default one).
///
/// Candidates with fewer trail groups come first, then those without short
/// closed trails. Alternatives let product constructions retry with
/// different legs.
pub fn nth_base_decomposition(h: &Graph, rank: usize, budget: u64) -> Result<BaseDecomposition> {
    let mut all = base_decompositions(h, CANDIDATES.max(rank + 1), budget)?;
    if rank >= all.len() {
        return Err(Error::Construction(format!("only {} base decompositions available", all.len())));
    }
    Ok(all.swap_remove(rank))
}

/// Up to `limit` distinct decompositions, best ranked first.
pub fn base_decompositions(h: &Graph, limit: usize, budget: u64) -> Result<Vec<BaseDecomposition>> {
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut all: Vec<BaseDecomposition> =
        search_legs(h, limit, budget)?.into_iter().map(|l| group_legs(h, l)).collect();
    all.sort_by_key(|d| {
        let groups = d.stats.t1 + d.stats.t2 + d.stats.t3;
        let short_closed = d.closed_trails.iter().filter(|t| t.r() <= 3).count();
        (groups, short_closed)
    });
    Ok(all)
}

struct Chain {
    verts: Vec<Vertex>,
    edges: Vec<usize>,
    vset: BitSet,
}

struct SearchState {
    chain_of_edge: Vec<usize>,
    chains: Vec<Option<Chain>>,
}

impl Clone for SearchState {
    fn clone(&self) -> Self {
        SearchState {
            chain_of_edge: self.chain_of_edge.clone(),
            chains: self
                .chains
                .iter()
                .map(|c| {
                    c.as_ref().map(|c| Chain { verts: c.verts.clone(), edges: c.edges.clone(), vset: c.vset.clone() })
                })
                .collect(),
        }
    }
}

impl SearchState {
    /// Joins the chains through edges `e1` and `e2` at `v`; false if the
    /// result would not be a simple path.
    fn join(&mut self, e1: usize, e2: usize, v: Vertex) -> bool {
        let (c1, c2) = (self.chain_of_edge[e1], self.chain_of_edge[e2]);
        if c1 == c2 {
            return false;
        }
        let a = self.chains[c1].as_ref().unwrap();
        let b = self.chains[c2].as_ref().unwrap();
        if a.vset.intersection_count(&b.vset) != 1 {
            return false;
        }
        let mut a = self.chains[c1].take().unwrap();
        let mut b = self.chains[c2].take().unwrap();
        if *a.verts.last().unwrap() != v {
            a.verts.reverse();
        }
        if b.verts[0] != v {
            b.verts.reverse();
        }
        debug_assert_eq!(*a.verts.last().unwrap(), v);
        debug_assert_eq!(b.verts[0], v);
        a.verts.extend_from_slice(&b.verts[1..]);
        for &e in &b.edges {
            self.chain_of_edge[e] = c1;
        }
        a.edges.extend(b.edges);
        a.vset.union_with(&b.vset);
        self.chains[c1] = Some(a);
        true
    }
}

/// All ways to pick `pairs` disjoint pairs from `items`.
fn pairings(items: &[usize], pairs: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        items: &[usize],
        used: &mut Vec<bool>,
        pairs: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == pairs {
            out.push(cur.clone());
            return;
        }
        let free_left = used.iter().filter(|u| !**u).count();
        if free_left < 2 * (pairs - cur.len()) {
            return;
        }
        let Some(i) = used.iter().position(|u| !*u) else { return };
        used[i] = true;
        for j in i + 1..items.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            cur.push((items[i], items[j]));
            rec(items, used, pairs, cur, out);
            cur.pop();
            used[j] = false;
        }
        // leave item i as a path end
        rec(items, used, pairs, cur, out);
        used[i] = false;
    }
    let mut out = Vec::new();
    rec(items, &mut vec![false; items.len()], pairs, &mut Vec::new(), &mut out);
    out
}

fn search_legs(h: &Graph, limit: usize, budget: u64) -> Result<Vec<Vec<Vec<Vertex>>>> {
    let edges = h.edges();
    let index: BTreeMap<(Vertex, Vertex), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let incident: Vec<Vec<usize>> =
        (0..h.n()).map(|v| h.neighbors(v).iter().map(|&w| index[&norm(v, w)]).collect()).collect();
    let mut state = SearchState { chain_of_edge: (0..edges.len()).collect(), chains: Vec::new() };
    for &(a, b) in edges {
        let mut vset = BitSet::with_capacity(h.n());
        vset.insert(a);
        vset.insert(b);
        state.chains.push(Some(Chain { verts: vec![a, b], edges: vec![state.chains.len()], vset }));
    }
    // high-degree vertices first: they carry most of the branching
    let mut order: Vec<Vertex> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut search = Search { h, incident: &incident, order: &order, nodes: 0, budget, limit, found: Vec::new() };
    let outcome = search.dfs(0, state);
    match (outcome, search.found.is_empty()) {
        (Err(e), true) => Err(e),
        (_, true) => Err(Error::Construction("no decomposition with simple legs exists".into())),
        _ => Ok(search.found),
    }
}

struct Search<'a> {
    h: &'a Graph,
    incident: &'a [Vec<usize>],
    order: &'a [Vertex],
    nodes: u64,
    budget: u64,
    limit: usize,
    found: Vec<Vec<Vec<Vertex>>>,
}

impl Search<'_> {
    /// Returns Ok(true) once enough solutions are collected.
    fn dfs(&mut self, depth: usize, state: SearchState) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(self.budget));
        }
        if depth == self.order.len() {
            let mut legs: Vec<Vec<Vertex>> = state.chains.into_iter().flatten().map(|c| c.verts).collect();
            for leg in &mut legs {
                if leg[0] > *leg.last().unwrap() {
                    leg.reverse();
                }
            }
            legs.sort();
            self.found.push(legs);
            return Ok(self.found.len() >= self.limit);
        }
        let v = self.order[depth];
        let d = self.h.degree(v);
        let pairs = if d % 2 == 1 { (d - 1) / 2 } else { (d - 2) / 2 };
        for choice in pairings(&self.incident[v], pairs) {
            let mut next = state.clone();
            if choice.iter().all(|&(e1, e2)| next.join(e1, e2, v)) && self.dfs(depth + 1, next)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Groups legs into odd-odd paths, open trails and closed trails and fixes
/// the real assignment.
fn group_legs(h: &Graph, legs: Vec<Vec<Vertex>>) -> BaseDecomposition {
    let n = h.n();
    let legs: Vec<BasePath> = legs.into_iter().map(|vertices| BasePath { vertices }).collect();
    let mut ends_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, leg) in legs.iter().enumerate() {
        ends_at[leg.first()].push(i);
        ends_at[leg.last()].push(i);
    }
    let mut used = vec![false; legs.len()];
    let mut odd_odd = Vec::new();
    for (i, leg) in legs.iter().enumerate() {
        if h.is_odd(leg.first()) && h.is_odd(leg.last()) {
            used[i] = true;
            odd_odd.push(leg.clone());
        }
    }
    let oriented_from = |leg: &BasePath, v: Vertex| if leg.first() == v { leg.clone() } else { leg.reversed() };
    let next_leg = |cur: usize, at: Vertex| ends_at[at].iter().copied().find(|&j| j != cur);

    let mut open_trails = Vec::new();
    for a in (0..n).filter(|&v| h.is_odd(v)) {
        let start = ends_at[a][0];
        if used[start] {
            continue;
        }
        let mut chain = Vec::new();
        let mut cur = start;
        let mut at = a;
        loop {
            used[cur] = true;
            let leg = oriented_from(&legs[cur], at);
            at = leg.last();
            chain.push(leg);
            if h.is_odd(at) {
                break;
            }
            cur = next_leg(cur, at).expect("even junction ends two legs");
        }
        open_trails.push(TrailGroup::from_legs(chain, false));
    }

    let mut closed_trails = Vec::new();
    while let Some(y) = (0..n).find(|&v| ends_at[v].iter().any(|&i| !used[i])) {
        // orient towards the smaller second junction
        let cands: Vec<usize> = ends_at[y].iter().copied().filter(|&i| !used[i]).collect();
        let start = *cands
            .iter()
            .min_by_key(|&&i| {
                let leg = oriented_from(&legs[i], y);
                (leg.last(), leg.vertices.clone())
            })
            .unwrap();
        let mut chain = Vec::new();
        let mut cur = start;
        let mut at = y;
        loop {
            used[cur] = true;
            let leg = oriented_from(&legs[cur], at);
            at = leg.last();
            chain.push(leg);
            if at == y {
                break;
            }
            cur = next_leg(cur, at).expect("even junction ends two legs");
        }
        closed_trails.push(TrailGroup::from_legs(chain, true));
    }

    let mut real: Vec<Option<RealSlot>> = vec![None; n];
    let mut place = |v: Vertex, slot: RealSlot| {
        if real[v].is_none() {
            real[v] = Some(slot);
        }
    };
    for (i, p) in odd_odd.iter().enumerate() {
        place(p.first(), RealSlot { group: GroupId::OddOdd(i), leg: 0 });
        place(p.last(), RealSlot { group: GroupId::OddOdd(i), leg: 0 });
    }
    for (gi, t) in open_trails.iter().enumerate() {
        for (k, leg) in t.legs.iter().enumerate() {
            place(leg.first(), RealSlot { group: GroupId::Open(gi), leg: k });
            place(leg.last(), RealSlot { group: GroupId::Open(gi), leg: k });
        }
    }
    for (gi, t) in closed_trails.iter().enumerate() {
        for (k, leg) in t.legs.iter().enumerate() {
            place(leg.first(), RealSlot { group: GroupId::Closed(gi), leg: k });
            place(leg.last(), RealSlot { group: GroupId::Closed(gi), leg: k });
        }
    }
    let real_assignment = real.into_iter().map(|s| s.expect("every vertex ends some leg")).collect();

    let n_o1 = 2 * odd_odd.len();
    let n_o2 = 2 * open_trails.len();
    let n_e1: usize = open_trails.iter().map(|t| t.r() - 1).sum();
    let n_e2: usize = closed_trails.iter().map(TrailGroup::r).sum();
    let stats = BaseStats { n_o1, n_o2, n_e1, n_e2, t1: odd_odd.len(), t2: open_trails.len(), t3: closed_trails.len() };
    BaseDecomposition { odd_odd, open_trails, closed_trails, real_assignment, stats }
}

/// Outcome of [`verify_base`]: passes iff `failures` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseReport {
    pub passed: bool,
    pub path_count: usize,
    pub expected_count: usize,
    pub failures: Vec<(String, String)>,
}

/// Checks a decomposition against `H` without trusting how it was built.
pub fn verify_base(h: &Graph, d: &BaseDecomposition) -> BaseReport {
    let mut failures: Vec<(String, String)> = Vec::new();
    let mut fail = |check: &str, witness: String| failures.push((check.to_string(), witness));
    let n = h.n();
    let pp = h.parity_profile();
    let expected_count = pp.n_odd / 2 + pp.n_even;

    // simple paths and exact cover
    let mut cover: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    let mut end_count = vec![0usize; n];
    let mut path_count = 0;
    for leg in d.all_legs() {
        path_count += 1;
        let vs = &leg.vertices;
        if vs.len() < 2 {
            fail("leg_nonempty", format!("{vs:?}"));
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        for &v in vs {
            if v >= n || !seen.insert(v) {
                fail("leg_simple", format!("vertex {v} repeats or is out of range in {vs:?}"));
            }
        }
        for w in vs.windows(2) {
            if w[0] >= n || w[1] >= n || !h.has_edge(w[0], w[1]) {
                fail("leg_edges", format!("{}-{} is not an edge", w[0], w[1]));
            } else {
                *cover.entry(norm(w[0], w[1])).or_default() += 1;
            }
        }
        if vs[0] < n && *vs.last().unwrap() < n {
            end_count[vs[0]] += 1;
            end_count[*vs.last().unwrap()] += 1;
        }
    }
    for &e in h.edges() {
        match cover.get(&e).copied().unwrap_or(0) {
            1 => {}
            0 => fail("cover", format!("edge {}-{} uncovered", e.0, e.1)),
            k => fail("disjoint", format!("edge {}-{} covered {k} times", e.0, e.1)),
        }
    }
    for (v, &ends) in end_count.iter().enumerate() {
        let want = if h.is_odd(v) { 1 } else { 2 };
        if ends != want {
            fail("end_multiplicity", format!("vertex {v} ends {ends} legs, expected {want}"));
        }
    }
    if path_count != expected_count {
        fail("count", format!("{path_count} paths, expected n_o/2 + n_e = {expected_count}"));
    }

    // group structure
    for p in &d.odd_odd {
        if !(h.is_odd(p.first()) && h.is_odd(p.last())) {
            fail("odd_odd", format!("{:?} is not odd-odd", p.vertices));
        }
    }
    for (closed, groups) in [(false, &d.open_trails), (true, &d.closed_trails)] {
        for t in groups.iter() {
            if t.closed != closed || t.legs.is_empty() || t.junctions.len() != t.r() + 1 {
                fail("group_shape", format!("{:?}", t.junctions));
                continue;
            }
            for (k, leg) in t.legs.iter().enumerate() {
                if leg.first() != t.junctions[k] || leg.last() != t.junctions[k + 1] {
                    fail("group_junction", format!("leg {k} of {:?}", t.junctions));
                }
            }
            let distinct_upto = if closed { t.r() } else { t.r() + 1 };
            let mut js = t.junctions[..distinct_upto].to_vec();
            js.sort_unstable();
            js.dedup();
            if js.len() != distinct_upto {
                fail("group_distinct", format!("{:?}", t.junctions));
            }
            if closed && t.junctions[0] != t.junctions[t.r()] {
                fail("group_closed", format!("{:?}", t.junctions));
            }
            for (k, &y) in t.junctions.iter().enumerate() {
                let extreme = !closed && (k == 0 || k == t.r());
                if y < n && h.is_odd(y) != extreme {
                    fail("group_parity", format!("junction {y} in {:?}", t.junctions));
                }
            }
        }
    }

    // statistics and counting identity
    let s = d.stats;
    if s.n_o1 + s.n_o2 != pp.n_odd {
        fail("stats_odd", format!("{} + {} != {}", s.n_o1, s.n_o2, pp.n_odd));
    }
    if s.n_e1 + s.n_e2 != pp.n_even {
        fail("stats_even", format!("{} + {} != {}", s.n_e1, s.n_e2, pp.n_even));
    }
    if s.t1 != d.odd_odd.len() || s.t2 != d.open_trails.len() || s.t3 != d.closed_trails.len() {
        fail("stats_groups", format!("{s:?}"));
    }
    let identity = 2 * d.odd_odd.len()
        + d.open_trails.iter().map(|t| t.r() + 1).sum::<usize>()
        + d.closed_trails.iter().map(TrailGroup::r).sum::<usize>();
    if identity != n {
        fail("counting_identity", format!("2t1 + sum(r+1) + sum(r) = {identity} != n = {n}"));
    }

    // real assignment
    if d.real_assignment.len() != n {
        fail("real_assignment", format!("{} entries for {n} vertices", d.real_assignment.len()));
    } else {
        for (v, slot) in d.real_assignment.iter().enumerate() {
            let legs = match slot.group {
                GroupId::OddOdd(i) if i < d.odd_odd.len() => d.group_legs(slot.group),
                GroupId::Open(i) if i < d.open_trails.len() => d.group_legs(slot.group),
                GroupId::Closed(i) if i < d.closed_trails.len() => d.group_legs(slot.group),
                _ => {
                    fail("real_assignment", format!("vertex {v}: no such group {:?}", slot.group));
                    continue;
                }
            };
            match legs.get(slot.leg) {
                Some(leg) if leg.first() == v || leg.last() == v => {}
                _ => fail("real_assignment", format!("vertex {v} is not an end of its real leg")),
            }
        }
    }

    BaseReport { passed: failures.is_empty(), path_count, expected_count, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn manual(h: &Graph, legs: &[&[usize]]) -> BaseDecomposition {
        group_legs(h, legs.iter().map(|l| l.to_vec()).collect())
    }

    #[test]
    fn k4_has_two_odd_odd_paths() {
        let k4 = Graph::complete(4);
        let d = gallai_base_decomposition(&k4).unwrap();
        assert_eq!(d.odd_odd.len(), 2);
        assert!(d.open_trails.is_empty() && d.closed_trails.is_empty());
        assert_eq!(d.stats.t1, 2);
        assert!(verify_base(&k4, &d).passed);
        // u1u4u2u3 and u2u1u3u4 (0-based)
        let listed = manual(&k4, &[&[0, 3, 1, 2], &[1, 0, 2, 3]]);
        assert!(verify_base(&k4, &listed).passed, "{:?}", verify_base(&k4, &listed));
    }

    #[test]
    fn k5_is_one_closed_trail() {
        let k5 = Graph::complete(5);
        let d = gallai_base_decomposition(&k5).unwrap();
        assert_eq!(d.path_count(), 5);
        assert_eq!(d.closed_trails.len(), 1);
        assert_eq!(d.closed_trails[0].r(), 5);
        assert_eq!(d.stats.t3, 1);
        assert!(verify_base(&k5, &d).passed);
        // u_i u_{i-1} u_{i+1}, indices mod 5
        let legs: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 4) % 5, (i + 1) % 5]).collect();
        let listed = group_legs(&k5, legs);
        assert_eq!(listed.closed_trails.len(), 1);
        assert!(verify_base(&k5, &listed).passed);
    }

    #[test]
    fn c4_single_edges() {
        let c4 = Graph::cycle(4);
        let d = gallai_base_decomposition(&c4).unwrap();
        assert_eq!(d.path_count(), 4);
        assert!(d.all_legs().all(|l| l.edge_count() == 1));
        assert_eq!(d.closed_trails.len(), 1);
        assert!(verify_base(&c4, &d).passed);
    }

    #[test]
    fn wrong_count_is_reported() {
        let k4 = Graph::complete(4);
        let bad = BaseDecomposition {
            odd_odd: vec![
                BasePath { vertices: vec![0, 1] },
                BasePath { vertices: vec![1, 2, 0, 3] },
                BasePath { vertices: vec![3, 1] },
                BasePath { vertices: vec![2, 3] },
            ],
            open_trails: vec![],
            closed_trails: vec![],
            real_assignment: vec![RealSlot { group: GroupId::OddOdd(0), leg: 0 }; 4],
            stats: BaseStats::default(),
        };
        let rep = verify_base(&k4, &bad);
        assert!(!rep.passed);
        assert!(rep.failures.iter().any(|(c, _)| c == "count"));
        assert_eq!(rep.path_count, 4);
        assert_eq!(rep.expected_count, 2);
    }

    #[test]
    fn single_edge() {
        let p2 = Graph::path(2);
        let d = gallai_base_decomposition(&p2).unwrap();
        assert_eq!(d.stats.t1, 1);
        assert!(verify_base(&p2, &d).passed);
    }

    #[test]
    fn trees_have_no_trails() {
        let spider = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let d = gallai_base_decomposition(&spider).unwrap();
        // center has degree 3 (odd); legs end at odd vertices or at even ones
        assert!(verify_base(&spider, &d).passed);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(gallai_base_decomposition(&Graph::empty(1)), Err(Error::NoEdges));
        assert_eq!(gallai_base_decomposition(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn pairing_counts() {
        assert_eq!(pairings(&[0, 1, 2], 1).len(), 3);
        assert_eq!(pairings(&[0, 1, 2, 3], 1).len(), 6);
        assert_eq!(pairings(&[0, 1, 2, 3, 4], 2).len(), 15);
    }
}
