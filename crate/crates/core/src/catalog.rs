//! Exhaustive catalogs of small connected graphs and seeded random
//! generators.
//!
//! Catalogs are built by vertex extension: every connected graph has a
//! vertex whose removal leaves it connected, so adding one vertex in every
//! possible way to every graph of the previous order reaches all of them.
//! Removing such a vertex never raises the cyclomatic number, so the
//! extension can be restricted to sparse graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::{family_chords, family_min_order, ClassTag};
use crate::error::{Error, Result};
use crate::graph::{norm, Graph, Vertex};

/// Canonical adjacency code: the minimum upper-triangle bit string over all
/// orderings compatible with an equitable colouring, with interchangeable
/// twins left in place.
pub fn canonical_code(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let colors = refine(g);
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    let mut by_color: Vec<(usize, Vertex)> = (0..n).map(|v| (colors[v], v)).collect();
    by_color.sort();
    for (c, v) in by_color {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == c => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u64>> = None;
    let mut order = Vec::with_capacity(n);
    arrange(g, &cells, 0, &mut order, &mut best);
    best.unwrap_or_default()
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let uniq: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let uniq: Vec<&(usize, Vec<usize>)> = uniq.into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| uniq.binary_search(&s).unwrap()).collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        if uniq.len() == before {
            return next;
        }
        colors = next;
    }
}

fn code_of(g: &Graph, order: &[Vertex]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let bits = n * (n.saturating_sub(1)) / 2;
    let mut code = vec![0u64; bits.div_ceil(64).max(1)];
    for &(a, b) in g.edges() {
        let (i, j) = norm(pos[a], pos[b]);
        let idx = j * (j - 1) / 2 + i;
        code[idx / 64] |= 1 << (idx % 64);
    }
    code.reverse();
    code
}

fn arrange(g: &Graph, cells: &[Vec<Vertex>], c: usize, order: &mut Vec<Vertex>, best: &mut Option<Vec<u64>>) {
    if c == cells.len() {
        let code = code_of(g, order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let cell = &cells[c];
    // vertices with the same neighbourhood are interchangeable
    let mut kinds: Vec<Vec<Vertex>> = Vec::new();
    for &v in cell {
        let nb = g.neighbors(v);
        match kinds.iter_mut().find(|k| {
            let w = k[0];
            let mut a: Vec<Vertex> = nb.iter().copied().filter(|&x| x != w).collect();
            let mut b: Vec<Vertex> = g.neighbors(w).iter().copied().filter(|&x| x != v).collect();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }) {
            Some(k) => k.push(v),
            None => kinds.push(vec![v]),
        }
    }
    let mut left: Vec<usize> = kinds.iter().map(Vec::len).collect();
    let mut taken = vec![0usize; kinds.len()];
    fill(g, cells, c, &kinds, &mut left, &mut taken, cell.len(), order, best);
}

#[allow(clippy::too_many_arguments)]
fn fill(
    g: &Graph,
    cells: &[Vec<Vertex>],
    c: usize,
    kinds: &[Vec<Vertex>],
    left: &mut [usize],
    taken: &mut [usize],
    remaining: usize,
    order: &mut Vec<Vertex>,
    best: &mut Option<Vec<u64>>,
) {
    if remaining == 0 {
        arrange(g, cells, c + 1, order, best);
        return;
    }
    for k in 0..kinds.len() {
        if left[k] == 0 {
            continue;
        }
        left[k] -= 1;
        order.push(kinds[k][taken[k]]);
        taken[k] += 1;
        fill(g, cells, c, kinds, left, taken, remaining - 1, order, best);
        taken[k] -= 1;
        order.pop();
        left[k] += 1;
    }
}

/// All connected graphs on `n` vertices up to isomorphism whose cyclomatic
/// number `e - n + 1` is at most `max_cyclomatic` (all of them when `None`).
pub fn connected_graphs(n: usize, max_cyclomatic: Option<usize>) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << (k - 1)) {
                let nb: Vec<Vertex> = (0..k - 1).filter(|&i| mask & (1 << i) != 0).collect();
                if let Some(c) = max_cyclomatic {
                    if g.m() + nb.len() + 1 > k + c {
                        continue;
                    }
                }
                let h = g.with_new_vertex(&nb).expect("fresh vertex");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return Vec::new();
    }
    level.sort_by_key(|g| (g.m(), canonical_code(g)));
    level
}

/// Connected graphs with `lo..=hi` vertices.
pub fn connected_range(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(|n| connected_graphs(n, None)).collect()
}

/// Unicyclic graphs (`e = n`) on exactly `n` vertices.
pub fn unicyclic_graphs(n: usize) -> Vec<Graph> {
    connected_graphs(n, Some(1)).into_iter().filter(|g| g.m() == n).collect()
}

/// Bicyclic graphs (`e = n + 1`) on exactly `n` vertices.
pub fn bicyclic_graphs(n: usize) -> Vec<Graph> {
    connected_graphs(n, Some(2)).into_iter().filter(|g| g.m() == n + 1).collect()
}

/// Trees on exactly `n` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    connected_graphs(n, Some(0))
}

/// `P_m` plus the chords of a path-plus-chords family (1-based spine positions).
pub fn family_graph(tag: ClassTag, m: usize) -> Result<Graph> {
    if m < family_min_order(tag)
        || !matches!(tag, ClassTag::FamilyA | ClassTag::FamilyB | ClassTag::FamilyF | ClassTag::Dumbbell)
    {
        return Err(Error::Usage(format!("no {tag} graph on {m} vertices")));
    }
    let mut edges: Vec<(Vertex, Vertex)> = (1..m).map(|i| (i - 1, i)).collect();
    edges.extend(family_chords(tag, m).into_iter().map(|(a, b)| (a - 1, b - 1)));
    Graph::new(m, edges)
}

/// A cycle of length `cycle_len` with a path of `tail_len` edges hanging off vertex 0.
pub fn tadpole(cycle_len: usize, tail_len: usize) -> Result<Graph> {
    if cycle_len < 3 {
        return Err(Error::Usage("the cycle needs at least 3 vertices".into()));
    }
    let n = cycle_len + tail_len;
    let mut edges: Vec<(Vertex, Vertex)> = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len)).collect();
    edges.extend((cycle_len..n).map(|v| (if v == cycle_len { 0 } else { v - 1 }, v)));
    Graph::new(n, edges)
}

/// Small graphs by name: `P<n>`, `C<n>`, `K<n>`, `S<n>` (star with `n`
/// leaves), `paw`, `bowtie`, `diamond`.
pub fn named(spec: &str) -> Option<Graph> {
    let fixed: Option<&[(Vertex, Vertex)]> = match spec {
        "paw" => Some(&[(0, 1), (1, 2), (2, 0), (2, 3)]),
        "bowtie" => Some(&[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
        "diamond" => Some(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        _ => None,
    };
    if let Some(edges) = fixed {
        let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap() + 1;
        return Graph::new(n, edges.iter().copied()).ok();
    }
    let (head, num) = spec.split_at(spec.find(|c: char| c.is_ascii_digit())?);
    let k: usize = num.parse().ok()?;
    match head {
        "P" if k >= 1 => Some(Graph::path(k)),
        "C" if k >= 3 => Some(Graph::cycle(k)),
        "K" if k >= 1 => Some(Graph::complete(k)),
        "S" => Some(Graph::star(k)),
        _ => None,
    }
}

/// Kinds of random graph produced by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Tree,
    Unicyclic,
    Bicyclic,
    Connected,
}

impl GenKind {
    pub fn min_order(self) -> usize {
        match self {
            GenKind::Tree | GenKind::Connected => 1,
            GenKind::Unicyclic => 3,
            GenKind::Bicyclic => 4,
        }
    }
}

/// Tree decoded from a uniformly random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::path(2);
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<Vertex> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

fn non_edges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for b in 1..g.n() {
        for a in 0..b {
            if !g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Seeded random graph of the given kind on `n` vertices.
///
/// Unicyclic: random tree plus one uniformly random non-edge. Bicyclic:
/// random tree plus two distinct random non-edges, resampled if they
/// coincide. Connected: random tree plus each non-edge with probability 1/2.
pub fn generate(kind: GenKind, n: usize, seed: u64) -> Result<Graph> {
    if n < kind.min_order() {
        return Err(Error::Usage(format!("{kind:?} graphs need at least {} vertices", kind.min_order())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_graph(kind, n, &mut rng))
}

/// As [`generate`] with a caller-owned generator.
pub fn random_graph(kind: GenKind, n: usize, rng: &mut impl Rng) -> Graph {
    let t = random_tree(n, rng);
    let extra = match kind {
        GenKind::Tree => Vec::new(),
        GenKind::Unicyclic => vec![*non_edges(&t).choose(rng).expect("n >= 3 leaves a non-edge")],
        GenKind::Bicyclic => {
            let pool = non_edges(&t);
            loop {
                let a = *pool.choose(rng).expect("n >= 4 leaves two non-edges");
                let b = *pool.choose(rng).unwrap();
                if a != b {
                    break vec![a, b];
                }
            }
        }
        GenKind::Connected => non_edges(&t).into_iter().filter(|_| rng.gen_bool(0.5)).collect(),
    };
    let mut edges = t.edges().to_vec();
    edges.extend(extra);
    Graph::new(n, edges).expect("adding non-edges keeps the graph simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        let t: Vec<usize> = (1..=9).map(|n| trees(n).len()).collect();
        assert_eq!(t, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        let t = tadpole(3, 2).unwrap();
        assert_eq!((t.n(), t.m()), (5, 5));
        assert_eq!(family_graph(ClassTag::FamilyF, 4).unwrap().m(), 5);
        assert!(family_graph(ClassTag::Dumbbell, 5).is_err());
        assert_eq!(named("C5"), Some(Graph::cycle(5)));
        assert_eq!(named("bowtie").unwrap().m(), 6);
        assert_eq!(named("C2"), None);
        assert_eq!(named("X3"), None);
        assert_ne!(canonical_code(&g), canonical_code(&Graph::cycle(5)));
    }

    #[test]
    fn generators_respect_kind() {
        for seed in 0..20 {
            let t = generate(GenKind::Tree, 7, seed).unwrap();
            assert!(t.is_connected() && t.m() == 6);
            let u = generate(GenKind::Unicyclic, 6, seed).unwrap();
            assert!(u.is_connected() && u.m() == 6);
            let b = generate(GenKind::Bicyclic, 5, seed).unwrap();
            assert!(b.is_connected() && b.m() == 6);
        }
        assert_eq!(generate(GenKind::Tree, 1, 0).unwrap().m(), 0);
        assert!(generate(GenKind::Unicyclic, 2, 0).is_err());
        assert_eq!(generate(GenKind::Bicyclic, 6, 9).unwrap(), generate(GenKind::Bicyclic, 6, 9).unwrap());
    }
}
