//! Structural classification of connected graphs into the families that
//! have dedicated product constructions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Most specific structural class of a connected graph, with witness data.
///
/// `order` witnesses are vertex sequences `u1..um` (as graph vertices) such
/// that the graph is the path `u1 u2 .. um` plus the family's extra edges:
///
/// * `FamilyA`:  `u1u3`, `u3u5`
/// * `FamilyB`:  `u1u4`, `u2u5`
/// * `FamilyF`:  `u1u3`, `u2u4`
/// * `Dumbbell`: `u1u3`, `u(m-2)um`
/// * `Tadpole`:  `u1ul` with `l = cycle_len`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum StructureClass {
    Path { order: Vec<Vertex> },
    Cycle { cycle: Vec<Vertex> },
    Tree,
    FamilyA { order: Vec<Vertex> },
    FamilyB { order: Vec<Vertex> },
    FamilyF { order: Vec<Vertex> },
    Dumbbell { order: Vec<Vertex> },
    Tadpole { cycle_len: usize, tail_len: usize, order: Vec<Vertex> },
    Unicyclic { cycle: Vec<Vertex> },
    Bicyclic { cycles: [Vec<Vertex>; 2] },
    Other { cyclomatic: usize },
}

/// Class tags without witnesses, used for comparisons and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    Path,
    Cycle,
    Tree,
    FamilyA,
    FamilyB,
    FamilyF,
    Dumbbell,
    Tadpole,
    Unicyclic,
    Bicyclic,
    Other,
}

impl StructureClass {
    pub fn tag(&self) -> ClassTag {
        match self {
            StructureClass::Path { .. } => ClassTag::Path,
            StructureClass::Cycle { .. } => ClassTag::Cycle,
            StructureClass::Tree => ClassTag::Tree,
            StructureClass::FamilyA { .. } => ClassTag::FamilyA,
            StructureClass::FamilyB { .. } => ClassTag::FamilyB,
            StructureClass::FamilyF { .. } => ClassTag::FamilyF,
            StructureClass::Dumbbell { .. } => ClassTag::Dumbbell,
            StructureClass::Tadpole { .. } => ClassTag::Tadpole,
            StructureClass::Unicyclic { .. } => ClassTag::Unicyclic,
            StructureClass::Bicyclic { .. } => ClassTag::Bicyclic,
            StructureClass::Other { .. } => ClassTag::Other,
        }
    }
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Path => "path",
            ClassTag::Cycle => "cycle",
            ClassTag::Tree => "tree",
            ClassTag::FamilyA => "family_a",
            ClassTag::FamilyB => "family_b",
            ClassTag::FamilyF => "family_f",
            ClassTag::Dumbbell => "dumbbell",
            ClassTag::Tadpole => "tadpole",
            ClassTag::Unicyclic => "unicyclic",
            ClassTag::Bicyclic => "bicyclic",
            ClassTag::Other => "other",
        }
    }
}

impl std::fmt::Display for ClassTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Extra edges (1-based positions along the spine) of each path-plus-chords family.
pub(crate) fn family_chords(tag: ClassTag, m: usize) -> Vec<(usize, usize)> {
    match tag {
        ClassTag::FamilyA => vec![(1, 3), (3, 5)],
        ClassTag::FamilyB => vec![(1, 4), (2, 5)],
        ClassTag::FamilyF => vec![(1, 3), (2, 4)],
        ClassTag::Dumbbell => vec![(1, 3), (m - 2, m)],
        _ => Vec::new(),
    }
}

pub(crate) fn family_min_order(tag: ClassTag) -> usize {
    match tag {
        ClassTag::FamilyA | ClassTag::FamilyB => 5,
        ClassTag::FamilyF => 4,
        ClassTag::Dumbbell => 6,
        ClassTag::Tadpole => 4,
        ClassTag::Cycle => 3,
        _ => 2,
    }
}

/// Classifies a connected graph; see [`StructureClass`] for the priority order.
pub fn classify(g: &Graph) -> Result<StructureClass> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let e = g.m();
    let cyclomatic = e + 1 - n;
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    if cyclomatic == 0 {
        if max_deg <= 2 {
            let start = (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0);
            return Ok(StructureClass::Path { order: walk_path(g, start) });
        }
        return Ok(StructureClass::Tree);
    }
    if cyclomatic == 1 && max_deg == 2 {
        return Ok(StructureClass::Cycle { cycle: normalized_cycle(&walk_cycle(g)) });
    }
    if cyclomatic == 2 && n <= 24 {
        for tag in [ClassTag::FamilyA, ClassTag::FamilyB, ClassTag::FamilyF, ClassTag::Dumbbell] {
            if n < family_min_order(tag) {
                continue;
            }
            if let Some(order) = find_spine(g, &family_chords(tag, n)) {
                return Ok(match tag {
                    ClassTag::FamilyA => StructureClass::FamilyA { order },
                    ClassTag::FamilyB => StructureClass::FamilyB { order },
                    ClassTag::FamilyF => StructureClass::FamilyF { order },
                    _ => StructureClass::Dumbbell { order },
                });
            }
        }
    }
    if cyclomatic == 1 {
        let cycle = fundamental_cycles(g).remove(0);
        let ones = (0..n).filter(|&v| g.degree(v) == 1).count();
        let threes = (0..n).filter(|&v| g.degree(v) == 3).count();
        if max_deg == 3 && ones == 1 && threes == 1 {
            let l = cycle.len();
            let order = find_spine(g, &[(1, l)]).expect("tadpole has a spine");
            return Ok(StructureClass::Tadpole { cycle_len: l, tail_len: n - l, order });
        }
        return Ok(StructureClass::Unicyclic { cycle: normalized_cycle(&cycle) });
    }
    if cyclomatic == 2 {
        let mut cycles = fundamental_cycles(g);
        let b = normalized_cycle(&cycles.pop().unwrap());
        let a = normalized_cycle(&cycles.pop().unwrap());
        return Ok(StructureClass::Bicyclic { cycles: [a, b] });
    }
    Ok(StructureClass::Other { cyclomatic })
}

fn walk_path(g: &Graph, start: Vertex) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev && !order.contains(&w));
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
                order.push(w);
            }
            None => return order,
        }
    }
}

fn walk_cycle(g: &Graph) -> Vec<Vertex> {
    walk_path(g, 0)
}

/// Rotates and orients a cycle so it starts at its smallest vertex and
/// continues towards the smaller of that vertex's two cycle neighbours.
pub fn normalized_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let k = cycle.len();
    if k == 0 {
        return Vec::new();
    }
    let (pos, _) = cycle.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
    let fwd = cycle[(pos + 1) % k];
    let bwd = cycle[(pos + k - 1) % k];
    if fwd <= bwd {
        (0..k).map(|i| cycle[(pos + i) % k]).collect()
    } else {
        (0..k).map(|i| cycle[(pos + k - i) % k]).collect()
    }
}

/// Fundamental cycles with respect to a BFS spanning tree rooted at 0,
/// one per non-tree edge in edge order.
pub fn fundamental_cycles(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    let mut tree = std::collections::BTreeSet::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    tree.insert(crate::graph::norm(v, w));
                    queue.push_back(w);
                }
            }
        }
    }
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        if tree.contains(&(a, b)) {
            continue;
        }
        let (mut x, mut y) = (a, b);
        let mut left = vec![x];
        let mut right = vec![y];
        while x != y {
            if depth[x] >= depth[y] {
                x = parent[x];
                left.push(x);
            } else {
                y = parent[y];
                right.push(y);
            }
        }
        right.pop();
        right.reverse();
        left.extend(right);
        out.push(left);
    }
    out
}

/// Finds the lexicographically smallest vertex order `u1..um` that is a
/// Hamiltonian path of `g` such that `g` is exactly that path plus `chords`
/// (1-based positions).
pub fn find_spine(g: &Graph, chords: &[(usize, usize)]) -> Option<Vec<Vertex>> {
    let n = g.n();
    if g.m() != n - 1 + chords.len() {
        return None;
    }
    if chords.iter().any(|&(i, j)| i == 0 || j > n || i >= j || j == i + 1) {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for s in 0..n {
        order.push(s);
        used[s] = true;
        if extend_spine(g, chords, &mut order, &mut used) {
            return Some(order);
        }
        used[s] = false;
        order.pop();
    }
    None
}

fn extend_spine(g: &Graph, chords: &[(usize, usize)], order: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
    let k = order.len();
    // check the chords whose larger end has just been placed
    let last = order[k - 1];
    for &(i, j) in chords {
        if j == k && !g.has_edge(order[i - 1], last) {
            return false;
        }
    }
    if k == g.n() {
        return true;
    }
    let nbrs: Vec<Vertex> = g.neighbors(last).to_vec();
    for w in nbrs {
        if used[w] {
            continue;
        }
        order.push(w);
        used[w] = true;
        if extend_spine(g, chords, order, used) {
            return true;
        }
        used[w] = false;
        order.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn paths_cycles_trees() {
        assert_eq!(classify(&Graph::path(4)).unwrap().tag(), ClassTag::Path);
        assert_eq!(classify(&Graph::path(1)).unwrap().tag(), ClassTag::Path);
        match classify(&Graph::cycle(5)).unwrap() {
            StructureClass::Cycle { cycle } => assert_eq!(cycle, vec![0, 1, 2, 3, 4]),
            other => panic!("{other:?}"),
        }
        assert_eq!(classify(&Graph::star(3)).unwrap().tag(), ClassTag::Tree);
    }

    #[test]
    fn families() {
        // P5 + u1u3 + u2u4
        let f = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 3)]);
        match classify(&f).unwrap() {
            StructureClass::FamilyF { order } => {
                let pos = |v: usize| order.iter().position(|&x| x == v).unwrap() + 1;
                assert!(f.has_edge(order[0], order[2]) && f.has_edge(order[1], order[3]));
                assert_eq!(pos(4), 5);
            }
            other => panic!("{other:?}"),
        }
        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(classify(&bowtie).unwrap().tag(), ClassTag::FamilyA);
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(classify(&k23).unwrap().tag(), ClassTag::FamilyB);
        let diamond = g(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(classify(&diamond).unwrap().tag(), ClassTag::FamilyF);
        let dumbbell = g(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]);
        assert_eq!(classify(&dumbbell).unwrap().tag(), ClassTag::Dumbbell);
    }

    #[test]
    fn tadpoles_and_general() {
        let tad = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        match classify(&tad).unwrap() {
            StructureClass::Tadpole { cycle_len, tail_len, .. } => assert_eq!((cycle_len, tail_len), (3, 2)),
            other => panic!("{other:?}"),
        }
        let two_pendants = g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]);
        assert_eq!(classify(&two_pendants).unwrap().tag(), ClassTag::Unicyclic);
        let k4 = Graph::complete(4);
        assert_eq!(classify(&k4).unwrap(), StructureClass::Other { cyclomatic: 3 });
        assert_eq!(classify(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn relabel_invariance_spot_check() {
        let tad = g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let perm = [5, 3, 1, 0, 2, 4];
        assert_eq!(classify(&tad).unwrap().tag(), classify(&tad.relabel(&perm)).unwrap().tag());
    }
}
