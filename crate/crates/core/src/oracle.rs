//! Exact minimum path decompositions of small graphs.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default node budget for [`min_path_decomposition`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 2_000_000;

/// Edge masks are 128 bits wide.
pub const MAX_ORACLE_EDGES: usize = 128;

/// `p(G)` with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: usize,
    pub lower_bound: usize,
    pub paths: Vec<Vec<Vertex>>,
    pub nodes: u64,
}

/// `max(n_o/2, ⌈e/(n' - 1)⌉)` where `n'` counts non-isolated vertices.
pub fn lower_bound(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let active = (0..g.n()).filter(|&v| g.degree(v) > 0).count();
    let odd = (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).count();
    (odd / 2).max(g.m().div_ceil(active - 1))
}

struct Search<'g> {
    g: &'g Graph,
    ids: HashMap<(Vertex, Vertex), usize>,
    failed: HashMap<u128, usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn edge(&self, a: Vertex, b: Vertex) -> usize {
        self.ids[&crate::graph::norm(a, b)]
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(self.budget));
        }
        Ok(())
    }

    fn degrees(&self, mask: u128) -> Vec<usize> {
        let mut deg = vec![0; self.g.n()];
        for (i, &(a, b)) in self.g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[a] += 1;
                deg[b] += 1;
            }
        }
        deg
    }

    /// Simple paths from `path`'s last vertex within `mask`, avoiding `banned`.
    fn extend(
        &mut self,
        mask: u128,
        path: &mut Vec<Vertex>,
        used: u128,
        banned: &[Vertex],
        out: &mut Vec<(Vec<Vertex>, u128)>,
    ) -> Result<()> {
        let v = *path.last().unwrap();
        for &w in self.g.neighbors(v) {
            let e = self.edge(v, w);
            if mask >> e & 1 == 0 || path.contains(&w) || banned.contains(&w) {
                continue;
            }
            self.tick()?;
            path.push(w);
            out.push((path.clone(), used | 1 << e));
            self.extend(mask, path, used | 1 << e, banned, out)?;
            path.pop();
        }
        Ok(())
    }

    fn candidates(&mut self, mask: u128) -> Result<Vec<(Vec<Vertex>, u128)>> {
        let deg = self.degrees(mask);
        let mut out = Vec::new();
        if let Some(v) = (0..self.g.n()).find(|&v| deg[v] % 2 == 1) {
            self.extend(mask, &mut vec![v], 0, &[], &mut out)?;
        } else {
            let v = (0..self.g.n()).find(|&v| deg[v] > 0).expect("mask is nonempty");
            let w = self.g.neighbors(v).iter().copied().find(|&w| mask >> self.edge(v, w) & 1 == 1).unwrap();
            let first = 1u128 << self.edge(v, w);
            let mut lefts = vec![(vec![v], 0u128)];
            self.extend(mask & !first, &mut vec![v], 0, &[w], &mut lefts)?;
            for (left, lu) in lefts {
                let mut rights = vec![(vec![w], 0u128)];
                self.extend(mask & !first & !lu, &mut vec![w], 0, &left, &mut rights)?;
                for (right, ru) in rights {
                    let mut p: Vec<Vertex> = left.iter().rev().copied().collect();
                    p.extend(right);
                    out.push((p, lu | ru | first));
                }
            }
        }
        out.sort_by_key(|(p, _)| std::cmp::Reverse(p.len()));
        Ok(out)
    }

    fn solve(&mut self, mask: u128, k: usize) -> Result<Option<Vec<Vec<Vertex>>>> {
        if mask == 0 {
            return Ok(Some(Vec::new()));
        }
        if k == 0 || self.failed.get(&mask).is_some_and(|&f| f >= k) {
            return Ok(None);
        }
        self.tick()?;
        let deg = self.degrees(mask);
        let odd = deg.iter().filter(|&&d| d % 2 == 1).count();
        let active = deg.iter().filter(|&&d| d > 0).count();
        if odd / 2 > k || mask.count_ones() as usize > k * (active - 1) {
            return Ok(None);
        }
        for (p, used) in self.candidates(mask)? {
            if let Some(mut rest) = self.solve(mask & !used, k - 1)? {
                rest.insert(0, p);
                return Ok(Some(rest));
            }
        }
        if (self.failed.len() as u64) < self.budget {
            let f = self.failed.entry(mask).or_insert(0);
            *f = (*f).max(k);
        }
        Ok(None)
    }
}

/// Exact `p(G)` by iterative deepening from [`lower_bound`].
///
/// Branches on every path starting at the lowest odd vertex, or on every
/// path through the lowest edge when no vertex is odd. Failed edge sets are
/// memoized. Exceeding `budget` search nodes is an error, never a guess.
pub fn min_path_decomposition(g: &Graph, budget: u64) -> Result<OracleResult> {
    if g.m() > MAX_ORACLE_EDGES {
        return Err(Error::Budget(budget));
    }
    let ids = g.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut s = Search { g, ids, failed: HashMap::new(), nodes: 0, budget };
    let full: u128 = if g.m() == 128 { u128::MAX } else { (1u128 << g.m()) - 1 };
    let lb = lower_bound(g);
    for k in lb..=g.m() {
        if let Some(paths) = s.solve(full, k)? {
            return Ok(OracleResult { value: k, lower_bound: lb, paths, nodes: s.nodes });
        }
    }
    unreachable!("one path per edge always works")
}

/// Replaces `k` random edges, one after another, by paths of length two.
pub fn random_subdivision(g: &Graph, k: usize, rng: &mut impl Rng) -> Graph {
    let mut cur = g.clone();
    for _ in 0..k {
        if cur.m() == 0 {
            break;
        }
        let (a, b) = cur.edges()[rng.gen_range(0..cur.m())];
        let fresh = cur.n();
        let mut edges: Vec<(Vertex, Vertex)> = cur.edges().iter().copied().filter(|&e| e != (a, b)).collect();
        edges.push((a, fresh));
        edges.push((fresh, b));
        cur = Graph::new(fresh + 1, edges).expect("subdividing keeps the graph simple");
    }
    cur
}

/// Whether `p(G) = p(G')` for `G'` obtained by `k` seeded random subdivisions.
pub fn subdivision_invariance_check(g: &Graph, k: usize, seed: u64, budget: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sub = random_subdivision(g, k, &mut rng);
    Ok(min_path_decomposition(g, budget)?.value == min_path_decomposition(&sub, budget)?.value)
}
