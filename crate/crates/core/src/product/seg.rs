//! Segment-level model of `core ⊡ component`.
//!
//! A component of the base decomposition of `H` is a chain of legs
//! `L_1 .. L_r` meeting at junctions `y_1 .. y_{r+1}`. Inside the product the
//! only vertices where a path can change direction without being forced are
//! the junction copies `(u, y_k)`, so every path is a walk over two kinds of
//! segments: a column edge `(u, y_k)(u', y_k)` of the core copy at a junction,
//! and a leg copy `L_j^u` running along row `u`.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::base::{BasePath, Component};
use crate::graph::{Graph, Vertex};

/// A component of the base decomposition as an oriented chain of legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub legs: Vec<Vec<Vertex>>,
    pub closed: bool,
}

impl Frame {
    pub fn from_component(c: Component<'_>) -> Frame {
        match c {
            Component::OddOdd(p) => Frame { legs: vec![p.vertices.clone()], closed: false },
            Component::Trail(t) => {
                Frame { legs: t.legs.iter().map(|l: &BasePath| l.vertices.clone()).collect(), closed: t.closed }
            }
        }
    }

    pub fn r(&self) -> usize {
        self.legs.len()
    }

    /// Number of distinct junctions.
    pub fn junctions(&self) -> usize {
        if self.closed {
            self.r()
        } else {
            self.r() + 1
        }
    }

    pub fn junction(&self, k: usize) -> Vertex {
        if k < self.r() {
            self.legs[k][0]
        } else {
            *self.legs[self.r() - 1].last().unwrap()
        }
    }

    fn head(&self, j: usize) -> usize {
        if self.closed {
            (j + 1) % self.r()
        } else {
            j + 1
        }
    }

    /// Junction reached from `k` along leg `j`, with the traversal direction.
    fn across(&self, j: usize, k: usize) -> Option<(usize, bool)> {
        if j >= self.r() {
            None
        } else if k == j {
            Some((self.head(j), true))
        } else if k == self.head(j) {
            Some((j, false))
        } else {
            None
        }
    }

    /// The same chain traversed from the other end.
    pub fn reversed(&self) -> Frame {
        let legs = self.legs.iter().rev().map(|l| l.iter().rev().copied().collect()).collect();
        Frame { legs, closed: self.closed }
    }

    /// A closed chain started at leg `s`.
    pub fn rotated(&self, s: usize) -> Frame {
        let r = self.r();
        Frame { legs: (0..r).map(|i| self.legs[(i + s) % r].clone()).collect(), closed: self.closed }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Move along the core copy at the current junction to this core vertex.
    Col(usize),
    /// Traverse this leg along the current row.
    Leg(usize),
}

/// A path given by its start `(core vertex, junction index)` and its steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub start: (usize, usize),
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Key {
    Col { k: usize, a: usize, b: usize },
    Leg { u: usize, j: usize },
}

fn col_key(k: usize, a: usize, b: usize) -> Key {
    Key::Col { k, a: a.min(b), b: a.max(b) }
}

/// Everything needed to interpret walks: the core graph and the frame.
pub struct Model<'a> {
    pub core: &'a Graph,
    pub frame: &'a Frame,
}

/// Junction-level vertices and segment keys of a walk.
pub type Trace = (Vec<(usize, usize)>, Vec<Key>);

impl Model<'_> {
    /// Junction-level vertices visited and segment keys used, in order.
    pub fn trace(&self, w: &Walk) -> Result<Trace, String> {
        let (mut u, mut k) = w.start;
        if u >= self.core.n() || k >= self.frame.junctions() {
            return Err(format!("start {:?} out of range", w.start));
        }
        let mut verts = vec![(u, k)];
        let mut keys = Vec::with_capacity(w.steps.len());
        for s in &w.steps {
            match *s {
                Step::Col(v) => {
                    if v >= self.core.n() || !self.core.has_edge(u, v) {
                        return Err(format!("no core edge {u}-{v}"));
                    }
                    keys.push(col_key(k, u, v));
                    u = v;
                }
                Step::Leg(j) => {
                    let (nk, _) =
                        self.frame.across(j, k).ok_or_else(|| format!("leg {j} does not touch junction {k}"))?;
                    keys.push(Key::Leg { u, j });
                    k = nk;
                }
            }
            verts.push((u, k));
        }
        Ok((verts, keys))
    }

    /// Product vertices `(core vertex, H vertex)` along the walk.
    pub fn expand(&self, w: &Walk) -> Vec<(usize, Vertex)> {
        let (mut u, mut k) = w.start;
        let mut out = vec![(u, self.frame.junction(k))];
        for s in &w.steps {
            match *s {
                Step::Col(v) => {
                    u = v;
                    out.push((u, self.frame.junction(k)));
                }
                Step::Leg(j) => {
                    let (nk, fwd) = self.frame.across(j, k).expect("walk was traced");
                    let leg = &self.frame.legs[j];
                    if fwd {
                        out.extend(leg[1..].iter().map(|&h| (u, h)));
                    } else {
                        out.extend(leg[..leg.len() - 1].iter().rev().map(|&h| (u, h)));
                    }
                    k = nk;
                }
            }
        }
        out
    }

    /// All segment keys of the component product.
    pub fn all_keys(&self) -> Vec<Key> {
        let mut keys = Vec::new();
        for k in 0..self.frame.junctions() {
            for &(a, b) in self.core.edges() {
                keys.push(col_key(k, a, b));
            }
        }
        for u in 0..self.core.n() {
            for j in 0..self.frame.r() {
                keys.push(Key::Leg { u, j });
            }
        }
        keys
    }

    /// Checks that the walks are simple and use every segment exactly once.
    pub fn check(&self, walks: &[Walk]) -> Result<(), String> {
        let mut seen = HashSet::new();
        for (i, w) in walks.iter().enumerate() {
            if w.steps.is_empty() {
                return Err(format!("walk {i} is empty"));
            }
            let (_, keys) = self.trace(w).map_err(|e| format!("walk {i}: {e}"))?;
            for key in keys {
                if !seen.insert(key) {
                    return Err(format!("segment {key:?} used twice"));
                }
            }
            let mut vs = HashSet::new();
            for v in self.expand(w) {
                if !vs.insert(v) {
                    return Err(format!("walk {i} repeats vertex {v:?}"));
                }
            }
        }
        for key in self.all_keys() {
            if !seen.contains(&key) {
                return Err(format!("segment {key:?} uncovered"));
            }
        }
        Ok(())
    }

    pub fn reverse(&self, w: &Walk) -> Walk {
        let (verts, _) = self.trace(w).expect("walk was traced");
        let steps = w
            .steps
            .iter()
            .enumerate()
            .rev()
            .map(|(i, s)| match s {
                Step::Col(_) => Step::Col(verts[i].0),
                Step::Leg(j) => Step::Leg(*j),
            })
            .collect();
        Walk { start: *verts.last().unwrap(), steps }
    }

    fn end(&self, w: &Walk) -> (usize, usize) {
        *self.trace(w).expect("walk was traced").0.last().unwrap()
    }

    /// Removes segments in `drop` from either end of `w`. Fails if one of them
    /// sits strictly inside the walk.
    pub fn trim(&self, w: &Walk, drop: &HashSet<Key>) -> Result<Option<Walk>, String> {
        let (verts, keys) = self.trace(w)?;
        let mut lo = 0;
        let mut hi = keys.len();
        while lo < hi && drop.contains(&keys[lo]) {
            lo += 1;
        }
        while hi > lo && drop.contains(&keys[hi - 1]) {
            hi -= 1;
        }
        if keys[lo..hi].iter().any(|k| drop.contains(k)) {
            return Err("segment removed from the middle of a walk".into());
        }
        if lo == hi {
            return Ok(None);
        }
        Ok(Some(Walk { start: verts[lo], steps: w.steps[lo..hi].to_vec() }))
    }

    /// Greedily concatenates walks sharing an end until at most `target` remain.
    pub fn join_until(&self, mut walks: Vec<Walk>, target: usize) -> Vec<Walk> {
        'outer: while walks.len() > target {
            for i in 0..walks.len() {
                for j in i + 1..walks.len() {
                    if let Some(w) = self.try_join(&walks[i], &walks[j]) {
                        walks[i] = w;
                        walks.remove(j);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        walks
    }

    fn try_join(&self, a: &Walk, b: &Walk) -> Option<Walk> {
        let ra = self.reverse(a);
        let rb = self.reverse(b);
        for (x, y) in [(a, b), (a, &rb), (&ra, b), (&ra, &rb)] {
            if self.end(x) != y.start {
                continue;
            }
            let xs: HashSet<_> = self.expand(x).into_iter().collect();
            let ys = self.expand(y);
            if ys[1..].iter().any(|v| xs.contains(v)) {
                continue;
            }
            let mut steps = x.steps.clone();
            steps.extend(y.steps.iter().copied());
            return Some(Walk { start: x.start, steps });
        }
        None
    }

    /// Splits walks at interior junction vertices until there are `target`.
    pub fn split_to(&self, mut walks: Vec<Walk>, target: usize) -> Vec<Walk> {
        while walks.len() < target {
            let Some(i) = walks.iter().rposition(|w| w.steps.len() >= 2) else { break };
            let w = walks.remove(i);
            let (verts, _) = self.trace(&w).expect("walk was traced");
            let cut = w.steps.len() - 1;
            walks.insert(i, Walk { start: verts[cut], steps: w.steps[cut..].to_vec() });
            walks.insert(i, Walk { start: w.start, steps: w.steps[..cut].to_vec() });
        }
        walks
    }

    /// Exhaustive search for at most `target` walks, bounded by `budget` nodes.
    pub fn search(&self, target: usize, budget: u64) -> Option<Vec<Walk>> {
        let mut s = Searcher::new(self, target, budget);
        if s.run() {
            Some(s.done.iter().map(|p| s.to_walk(p)).collect())
        } else {
            None
        }
    }
}

struct Seg {
    ends: (usize, usize),
    /// product vertices strictly inside the segment
    inner: Vec<(usize, Vertex)>,
    step_from: [Step; 2],
}

struct Searcher<'m, 'a> {
    model: &'m Model<'a>,
    segs: Vec<Seg>,
    incident: Vec<Vec<usize>>,
    nodes: Vec<(usize, usize)>,
    used: Vec<bool>,
    deg: Vec<usize>,
    target: usize,
    budget: u64,
    spent: u64,
    done: Vec<(usize, Vec<usize>)>,
    failed: HashMap<Vec<u64>, usize>,
}

impl<'m, 'a> Searcher<'m, 'a> {
    fn new(model: &'m Model<'a>, target: usize, budget: u64) -> Self {
        let fr = model.frame;
        let jn = fr.junctions();
        let id = |u: usize, k: usize| u * jn + k;
        let nodes: Vec<(usize, usize)> = (0..model.core.n()).flat_map(|u| (0..jn).map(move |k| (u, k))).collect();
        let mut segs = Vec::new();
        for key in model.all_keys() {
            match key {
                Key::Col { k, a, b } => segs.push(Seg {
                    ends: (id(a, k), id(b, k)),
                    inner: Vec::new(),
                    step_from: [Step::Col(b), Step::Col(a)],
                }),
                Key::Leg { u, j } => {
                    let (k2, _) = fr.across(j, j).unwrap();
                    let leg = &fr.legs[j];
                    segs.push(Seg {
                        ends: (id(u, j), id(u, k2)),
                        inner: leg[1..leg.len() - 1].iter().map(|&h| (u, h)).collect(),
                        step_from: [Step::Leg(j), Step::Leg(j)],
                    });
                }
            }
        }
        let mut incident = vec![Vec::new(); nodes.len()];
        let mut deg = vec![0; nodes.len()];
        for (i, s) in segs.iter().enumerate() {
            incident[s.ends.0].push(i);
            incident[s.ends.1].push(i);
            deg[s.ends.0] += 1;
            deg[s.ends.1] += 1;
        }
        Searcher {
            model,
            used: vec![false; segs.len()],
            segs,
            incident,
            nodes,
            deg,
            target,
            budget,
            spent: 0,
            done: Vec::new(),
            failed: HashMap::new(),
        }
    }

    fn product_vertex(&self, node: usize) -> (usize, Vertex) {
        let (u, k) = self.nodes[node];
        (u, self.model.frame.junction(k))
    }

    fn to_walk(&self, p: &(usize, Vec<usize>)) -> Walk {
        let (start, ref segs) = *p;
        let mut at = start;
        let mut steps = Vec::new();
        for &s in segs {
            let seg = &self.segs[s];
            if seg.ends.0 == at {
                steps.push(seg.step_from[0]);
                at = seg.ends.1;
            } else {
                steps.push(seg.step_from[1]);
                at = seg.ends.0;
            }
        }
        Walk { start: self.nodes[start], steps }
    }

    fn mask(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.used.len().div_ceil(64)];
        for (i, &u) in self.used.iter().enumerate() {
            if u {
                m[i / 64] |= 1 << (i % 64);
            }
        }
        m
    }

    fn run(&mut self) -> bool {
        self.solve().unwrap_or(false)
    }

    /// `None` means the budget ran out.
    fn solve(&mut self) -> Option<bool> {
        if self.used.iter().all(|&u| u) {
            return Some(true);
        }
        let odd: Vec<usize> = (0..self.nodes.len()).filter(|&v| self.deg[v] % 2 == 1).collect();
        let need = odd.len().div_ceil(2).max(1);
        if self.done.len() + need > self.target {
            return Some(false);
        }
        let key = self.mask();
        if let Some(&at) = self.failed.get(&key) {
            if at <= self.done.len() {
                return Some(false);
            }
        }
        let starts: Vec<usize> = match odd.first() {
            Some(&v) => vec![v],
            None => (0..self.nodes.len()).filter(|&v| self.deg[v] > 0).collect(),
        };
        for v in starts {
            let mut visited = BTreeSet::new();
            visited.insert(self.product_vertex(v));
            let mut path = Vec::new();
            if self.extend(v, v, &mut path, &mut visited)? {
                return Some(true);
            }
        }
        self.failed.insert(key, self.done.len());
        Some(false)
    }

    fn extend(
        &mut self,
        start: usize,
        at: usize,
        path: &mut Vec<usize>,
        visited: &mut BTreeSet<(usize, Vertex)>,
    ) -> Option<bool> {
        self.spent += 1;
        if self.spent > self.budget {
            return None;
        }
        let cand: Vec<usize> = self.incident[at].iter().copied().filter(|&s| !self.used[s]).collect();
        for s in cand {
            let seg = &self.segs[s];
            let other = if seg.ends.0 == at { seg.ends.1 } else { seg.ends.0 };
            let far = self.product_vertex(other);
            if visited.contains(&far) || seg.inner.iter().any(|v| visited.contains(v)) {
                continue;
            }
            let added: Vec<(usize, Vertex)> = seg.inner.iter().copied().chain(std::iter::once(far)).collect();
            for v in &added {
                visited.insert(*v);
            }
            self.used[s] = true;
            self.deg[at] -= 1;
            self.deg[other] -= 1;
            path.push(s);
            let r = self.extend(start, other, path, visited);
            path.pop();
            self.deg[at] += 1;
            self.deg[other] += 1;
            self.used[s] = false;
            for v in &added {
                visited.remove(v);
            }
            if r? {
                return Some(true);
            }
        }
        if !path.is_empty() {
            self.done.push((start, path.clone()));
            let r = self.solve();
            if r == Some(true) {
                return Some(true);
            }
            self.done.pop();
            r?;
        }
        Some(false)
    }
}

/// 1-based helper used by the explicit constructions: `at(i, j)` is the
/// vertex `(u_i, y_j)`, `leg(j)` traverses `L_j`, `col(i)` moves to `u_i`.
/// Junction and leg indices wrap around for closed chains.
pub struct Ctx {
    pub m: usize,
    pub r: usize,
    pub closed: bool,
}

impl Ctx {
    pub fn new(m: usize, frame: &Frame) -> Ctx {
        Ctx { m, r: frame.r(), closed: frame.closed }
    }

    fn y(&self, j: usize) -> usize {
        if self.closed {
            (j - 1) % self.r
        } else {
            j - 1
        }
    }

    pub fn at(&self, i: usize, j: usize) -> WalkBuilder<'_> {
        WalkBuilder { ctx: self, walk: Walk { start: (i - 1, self.y(j)), steps: Vec::new() } }
    }

    /// Single column edge `(u_a, y_j)(u_b, y_j)`.
    pub fn edge(&self, a: usize, b: usize, j: usize) -> Walk {
        self.at(a, j).col(b).done()
    }

    pub fn key_leg(&self, i: usize, j: usize) -> Key {
        Key::Leg { u: i - 1, j: self.y(j) }
    }
}

pub struct WalkBuilder<'c> {
    ctx: &'c Ctx,
    walk: Walk,
}

impl WalkBuilder<'_> {
    pub fn col(mut self, i: usize) -> Self {
        self.walk.steps.push(Step::Col(i - 1));
        self
    }

    /// Moves along the core through each listed vertex in turn.
    pub fn cols(mut self, is: &[usize]) -> Self {
        for &i in is {
            self.walk.steps.push(Step::Col(i - 1));
        }
        self
    }

    pub fn leg(mut self, j: usize) -> Self {
        self.walk.steps.push(Step::Leg(self.ctx.y(j)));
        self
    }

    pub fn done(self) -> Walk {
        self.walk
    }
}
