//! Explicit constructions over `core ⊡ component`, written with the 1-based
//! indices `u_i`, `y_j`, `L_j` of the text they follow.

use std::collections::HashSet;

use super::seg::{Ctx, Frame, Key, Model, Walk};

/// Core graphs that have a dedicated construction. The core is always
/// the path `u_1 .. u_m` plus the listed chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    Path,
    /// `C_m`, the tadpole with `l = m`.
    Cycle,
    /// `P_m + u_1 u_l`.
    Tadpole {
        l: usize,
    },
    FamilyA,
    FamilyB,
    FamilyF,
    Dumbbell,
}

impl Shape {
    /// Chords added to the spine, 1-based.
    pub fn chords(self, m: usize) -> Vec<(usize, usize)> {
        match self {
            Shape::Path => vec![],
            Shape::Cycle => vec![(1, m)],
            Shape::Tadpole { l } => vec![(1, l)],
            Shape::FamilyA => vec![(1, 3), (3, 5)],
            Shape::FamilyB => vec![(1, 4), (2, 5)],
            Shape::FamilyF => vec![(1, 3), (2, 4)],
            Shape::Dumbbell => vec![(1, 3), (m - 2, m)],
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            Shape::Path => 2,
            Shape::Cycle => 3,
            Shape::Tadpole { .. } | Shape::FamilyF => 4,
            Shape::FamilyA | Shape::FamilyB => 5,
            Shape::Dumbbell => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::Path => "path",
            Shape::Cycle => "cycle",
            Shape::Tadpole { .. } => "tadpole",
            Shape::FamilyA => "family_a",
            Shape::FamilyB => "family_b",
            Shape::FamilyF => "family_f",
            Shape::Dumbbell => "dumbbell",
        }
    }
}

/// Path count a construction is expected to reach on one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Target {
    Exact(usize),
    AtMost(usize),
}

impl Target {
    pub fn value(self) -> usize {
        match self {
            Target::Exact(v) | Target::AtMost(v) => v,
        }
    }
}

/// Per-component count claimed for `shape` on a core of order `m`.
pub fn claimed(shape: Shape, m: usize, frame: &Frame) -> Target {
    use Target::*;
    let r = frame.r();
    let odd_odd = !frame.closed && r == 1;
    match (shape, frame.closed) {
        (Shape::Path, false) => Exact(m + r - 1),
        (Shape::Path, true) => Exact(r),
        (Shape::Cycle, _) if m == 3 => {
            if frame.closed {
                Exact(r)
            } else {
                Exact(r + 2)
            }
        }
        (Shape::Cycle | Shape::Tadpole { .. } | Shape::FamilyA | Shape::Dumbbell, false) => Exact(m + 2 * r - 2),
        (Shape::Cycle | Shape::Tadpole { .. } | Shape::FamilyA | Shape::Dumbbell, true) => Exact(2 * r),
        (Shape::FamilyB, false) if odd_odd => Exact(m - 2),
        (Shape::FamilyB, false) if m >= 6 => Exact(m + 3 * r - 5),
        (Shape::FamilyB, false) => AtMost(2 * r + 2),
        (Shape::FamilyB, true) if m >= 6 => Exact(3 * r),
        (Shape::FamilyB, true) => AtMost(2 * r + 1),
        (Shape::FamilyF, false) if odd_odd => Exact(m),
        (Shape::FamilyF, false) if m >= 6 => Exact(m + 3 * r - 3),
        (Shape::FamilyF, false) if m == 5 => AtMost((5 * r + 3) / 2),
        (Shape::FamilyF, false) => AtMost(2 * r + 1),
        (Shape::FamilyF, true) if m >= 6 => Exact(3 * r),
        (Shape::FamilyF, true) if m == 5 => AtMost(5 * r / 2),
        (Shape::FamilyF, true) => Exact(2 * r),
    }
}

/// The count every component must stay within for the global bound:
/// `m` times the number of junction copies, halved.
pub fn budget(m: usize, frame: &Frame) -> usize {
    m * frame.junctions() / 2
}

/// Working set of walks with helpers for the edits the constructions make.
struct Plan<'a, 'm> {
    c: Ctx,
    model: &'a Model<'m>,
    walks: Vec<Walk>,
}

impl Plan<'_, '_> {
    /// Removes the single-edge walk `(u_a, y_j)(u_b, y_j)`.
    fn drop_edge(&mut self, a: usize, b: usize, j: usize) -> Result<(), String> {
        let x = self.c.edge(a, b, j);
        let y = self.c.edge(b, a, j);
        match self.walks.iter().position(|w| *w == x || *w == y) {
            Some(i) => {
                self.walks.remove(i);
                Ok(())
            }
            None => Err(format!("no single edge u{a}u{b} at y{j}")),
        }
    }

    /// Removes the walk holding segment `key`.
    fn remove_holding(&mut self, key: Key) -> Result<(), String> {
        for (i, w) in self.walks.iter().enumerate() {
            if self.model.trace(w)?.1.contains(&key) {
                self.walks.remove(i);
                return Ok(());
            }
        }
        Err(format!("no walk holds {key:?}"))
    }

    /// Closed chains with odd `r`, after the chords have been paired at
    /// `y_2, y_4, .., y_{r-1}`: the `u_1u_3` chord left at `y_1` is reached
    /// through `L_r^1` from snake `r - 1`. With `tail`, the `u_{m-2}u_m`
    /// chord at `y_1` is reached the same way through row `u_m`.
    fn reroute_odd(&mut self, tail: bool) -> Result<(), String> {
        let (m, r) = (self.c.m, self.c.r);
        self.drop_edge(1, 3, 1)?;
        let mut cut = vec![self.c.key_leg(1, r)];
        let mut old = vec![self.c.key_leg(2, r - 1)];
        // junction of the leg that carries row u_m back to y_1
        let back = if m % 2 == 0 { r } else { 1 };
        if tail {
            self.drop_edge(m - 2, m, 1)?;
            cut.push(self.c.key_leg(m, back));
            if back == 1 && r > 3 {
                old.push(self.c.key_leg(2, 2));
            }
        }
        self.cut(&cut)?;
        for k in old {
            self.remove_holding(k)?;
        }
        let ends_on = |j: usize| tail && (back == r || j == 2);
        let w = rerouted(&self.c, r - 1, true, tail, ends_on(r - 1).then_some(back));
        self.add(w);
        if tail && back == 1 && r > 3 {
            let w = rerouted(&self.c, 2, false, tail, Some(1));
            self.add(w);
        }
        Ok(())
    }

    fn add(&mut self, w: Walk) {
        self.walks.push(w);
    }

    /// Cuts the listed segments off the ends of whichever walks hold them.
    fn cut(&mut self, keys: &[Key]) -> Result<(), String> {
        let drop: HashSet<Key> = keys.iter().copied().collect();
        let mut out = Vec::with_capacity(self.walks.len());
        for w in &self.walks {
            if let Some(t) = self.model.trim(w, &drop)? {
                out.push(t);
            }
        }
        self.walks = out;
        Ok(())
    }

    /// Replaces the chord singletons `u_a u_b` at `y_j` and `y_{j+1}` and the
    /// leg `L_j^b` of the snake by one path through the leg. `b` must be an
    /// end row of the snakes.
    fn pair_chord(&mut self, a: usize, b: usize, j: usize) -> Result<(), String> {
        let next = j + 1;
        self.drop_edge(a, b, j)?;
        self.drop_edge(a, b, next)?;
        let leg = self.c.key_leg(b, j);
        self.cut(&[leg])?;
        let w = self.c.at(a, j).col(b).leg(j).col(a).done();
        self.add(w);
        Ok(())
    }
}

/// The snake through leg `L_j`: row `u_1` forward, then back and forth.
fn snake(c: &Ctx, j: usize) -> Walk {
    let mut b = c.at(1, j).leg(j);
    for i in 2..=c.m {
        b = b.col(i).leg(j);
    }
    b.done()
}

/// Snake `j` with `L_j^1` gone: with `head` it starts `u_3 u_1` at `y_1`
/// and takes `L_r^1` instead. With `paired` its `L_j^m` is gone too, and
/// `back` names the leg that then returns row `u_m` to `y_1` and `u_{m-2}`.
fn rerouted(c: &Ctx, j: usize, head: bool, paired: bool, back: Option<usize>) -> Walk {
    let m = c.m;
    let mut b = if head { c.at(3, 1).col(1).leg(c.r).col(2) } else { c.at(1, j + 1).col(2) };
    b = b.leg(j);
    for i in 3..m {
        b = b.col(i).leg(j);
    }
    b = b.col(m);
    if !paired {
        b = b.leg(j);
    }
    if let Some(t) = back {
        b = b.leg(t).col(m - 2);
    }
    b.done()
}

/// Snakes plus the leftover single column edges at the two end junctions.
fn path_walks(c: &Ctx) -> Vec<Walk> {
    let mut walks: Vec<Walk> = (1..=c.r).map(|j| snake(c, j)).collect();
    if !c.closed {
        // odd i at y_1, even i at y_{r+1}
        for i in (1..c.m).step_by(2) {
            walks.push(c.edge(i, i + 1, 1));
        }
        for i in (2..c.m).step_by(2) {
            walks.push(c.edge(i, i + 1, c.r + 1));
        }
    }
    walks
}

/// Junctions carrying chord singletons: interior ones for open chains, all
/// of them for closed chains.
fn chord_junctions(c: &Ctx) -> std::ops::RangeInclusive<usize> {
    if c.closed {
        1..=c.r
    } else {
        2..=c.r
    }
}

/// The explicit construction for `shape`; the result is not yet verified.
pub fn construct(shape: Shape, m: usize, frame: &Frame, model: &Model<'_>) -> Result<Vec<Walk>, String> {
    let c = Ctx::new(m, frame);
    if m < shape.min_order() {
        return Err(format!("{} needs order at least {}", shape.name(), shape.min_order()));
    }
    match shape {
        Shape::Path => Ok(path_walks(&c)),
        Shape::Cycle if m == 3 => Ok(triangle(&c)),
        Shape::Cycle => tadpole(c, m, model),
        Shape::Tadpole { l } => tadpole(c, l, model),
        Shape::FamilyA => family_a(c, model),
        Shape::FamilyB => family_b(c, model),
        Shape::FamilyF => family_f(c, model),
        Shape::Dumbbell => dumbbell(c, model),
    }
}

fn tadpole(c: Ctx, l: usize, model: &Model<'_>) -> Result<Vec<Walk>, String> {
    let walks = path_walks(&c);
    let mut p = Plan { c, model, walks };
    let (r, closed) = (p.c.r, p.c.closed);
    for j in chord_junctions(&p.c) {
        let w = p.c.edge(1, l, j);
        p.add(w);
    }
    if closed {
        return Ok(p.walks);
    }
    if l.is_multiple_of(2) {
        p.drop_edge(1, 2, 1)?;
        p.drop_edge(l - 1, l, 1)?;
        let w = p.c.at(2, 1).cols(&[1, l, l - 1]).done();
        p.add(w);
        let w = p.c.edge(1, l, r + 1);
        p.add(w);
    } else {
        p.drop_edge(1, 2, 1)?;
        let w = p.c.at(2, 1).cols(&[1, l]).done();
        p.add(w);
        p.drop_edge(l - 1, l, r + 1)?;
        let w = p.c.at(1, r + 1).cols(&[l, l - 1]).done();
        p.add(w);
    }
    Ok(p.walks)
}

fn triangle(c: &Ctx) -> Vec<Walk> {
    let r = c.r;
    if !c.closed && r == 1 {
        return vec![
            c.at(1, 1).cols(&[2, 3]).leg(1).cols(&[2, 1]).done(),
            c.at(3, 1).col(1).leg(1).col(3).done(),
            c.at(2, 1).leg(1).done(),
        ];
    }
    let mut walks = Vec::new();
    for j in 1..=r {
        let mut b = c.at(1, j).leg(j).col(2);
        if c.closed || j < r {
            b = b.leg(j + 1).col(3);
            if c.closed || j + 2 <= r {
                b = b.leg(j + 2).col(1);
            }
        }
        walks.push(b.done());
    }
    if !c.closed {
        walks.push(c.at(3, 1).cols(&[1, 2]).leg(1).col(3).leg(2).col(1).done());
        walks.push(c.at(2, 1).col(3).leg(1).col(1).done());
    }
    walks
}

fn family_a(c: Ctx, model: &Model<'_>) -> Result<Vec<Walk>, String> {
    let walks = path_walks(&c);
    let mut p = Plan { c, model, walks };
    let r = p.c.r;
    for j in chord_junctions(&p.c) {
        let w = p.c.at(1, j).cols(&[3, 5]).done();
        p.add(w);
    }
    if p.c.closed {
        return Ok(p.walks);
    }
    p.drop_edge(1, 2, 1)?;
    p.drop_edge(3, 4, 1)?;
    let w = p.c.at(2, 1).cols(&[1, 3]).done();
    p.add(w);
    let w = p.c.at(4, 1).cols(&[3, 5]).done();
    p.add(w);
    p.drop_edge(2, 3, r + 1)?;
    p.drop_edge(4, 5, r + 1)?;
    let w = p.c.at(1, r + 1).cols(&[3, 2]).done();
    p.add(w);
    let w = p.c.at(4, r + 1).cols(&[5, 3]).done();
    p.add(w);
    Ok(p.walks)
}

fn family_b(c: Ctx, model: &Model<'_>) -> Result<Vec<Walk>, String> {
    let walks = path_walks(&c);
    let mut p = Plan { c, model, walks };
    let (m, r, closed) = (p.c.m, p.c.r, p.c.closed);
    for j in chord_junctions(&p.c) {
        let w = p.c.edge(1, 4, j);
        p.add(w);
        let w = p.c.edge(2, 5, j);
        p.add(w);
    }
    if !closed {
        p.drop_edge(1, 2, 1)?;
        p.drop_edge(3, 4, 1)?;
        let w = p.c.at(3, 1).cols(&[4, 1, 2, 5]).done();
        p.add(w);
        p.drop_edge(2, 3, r + 1)?;
        p.drop_edge(4, 5, r + 1)?;
        let w = p.c.at(1, r + 1).cols(&[4, 5, 2, 3]).done();
        p.add(w);
    }
    if m == 5 {
        // both chords end on an end row of the snakes
        let js: Vec<usize> = match (closed, r % 2 == 0) {
            (false, true) => (2..=r.saturating_sub(2)).step_by(2).collect(),
            (false, false) => (2..r).step_by(2).collect(),
            (true, false) => (1..=r.saturating_sub(2)).step_by(2).collect(),
            (true, true) => (1..r).step_by(2).collect(),
        };
        for j in js {
            p.pair_chord(2, 5, j)?;
            p.pair_chord(4, 1, j)?;
        }
    }
    Ok(p.walks)
}

fn family_f(c: Ctx, model: &Model<'_>) -> Result<Vec<Walk>, String> {
    let walks = path_walks(&c);
    let mut p = Plan { c, model, walks };
    let (m, r, closed) = (p.c.m, p.c.r, p.c.closed);
    for j in chord_junctions(&p.c) {
        let w = p.c.edge(1, 3, j);
        p.add(w);
        let w = p.c.edge(2, 4, j);
        p.add(w);
    }
    if !closed {
        p.drop_edge(1, 2, 1)?;
        p.drop_edge(3, 4, 1)?;
        let w = p.c.at(1, 1).cols(&[3, 4]).done();
        p.add(w);
        let w = p.c.at(1, 1).cols(&[2, 4]).done();
        p.add(w);
        p.drop_edge(2, 3, r + 1)?;
        let w = p.c.at(1, r + 1).cols(&[3, 2, 4]).done();
        p.add(w);
    }
    if m >= 6 || (!closed && r == 1) {
        return Ok(p.walks);
    }
    if closed {
        // the u_1u_3 chords pair up along row u_1, and for m = 4 the u_2u_4
        // chords along row u_4
        let start = if r % 2 == 1 { 2 } else { 1 };
        let js: Vec<usize> = (start..r).step_by(2).collect();
        for j in js {
            p.pair_chord(3, 1, j)?;
            if m == 4 {
                p.pair_chord(2, 4, j)?;
            }
        }
        if r % 2 == 1 && r >= 3 {
            p.reroute_odd(m == 4)?;
        }
        return Ok(p.walks);
    }
    // open chain, m in {4, 5}: the path at y_1 through u_3 u_1 absorbs L_1^1
    // and the chord at y_2
    p.walks.retain(|w| *w != p.c.at(1, 1).cols(&[3, 4]).done());
    p.drop_edge(1, 3, 2)?;
    let leg = p.c.key_leg(1, 1);
    p.cut(&[leg])?;
    let w = p.c.at(4, 1).cols(&[3, 1]).leg(1).col(3).done();
    p.add(w);
    if m == 5 {
        p.drop_edge(4, 5, r + 1)?;
        p.walks.retain(|w| *w != p.c.at(1, r + 1).cols(&[3, 2, 4]).done());
        let w = p.c.at(1, r + 1).cols(&[3, 2, 4, 5]).done();
        p.add(w);
        let js: Vec<usize> = (3..r).step_by(2).collect();
        for j in js {
            p.pair_chord(3, 1, j)?;
        }
    } else {
        // m = 4: the path at y_1 through u_1 u_2 u_4 absorbs L_1^4 and the
        // u_2u_4 chord at y_2
        p.walks.retain(|w| *w != p.c.at(1, 1).cols(&[2, 4]).done());
        p.drop_edge(2, 4, 2)?;
        let leg = p.c.key_leg(4, 1);
        p.cut(&[leg])?;
        let w = p.c.at(1, 1).cols(&[2, 4]).leg(1).col(2).done();
        p.add(w);
        let js: Vec<usize> = (3..r).step_by(2).collect();
        for j in js {
            p.pair_chord(3, 1, j)?;
            p.pair_chord(2, 4, j)?;
        }
    }
    Ok(p.walks)
}

fn dumbbell(c: Ctx, model: &Model<'_>) -> Result<Vec<Walk>, String> {
    let walks = path_walks(&c);
    let mut p = Plan { c, model, walks };
    let (m, r, closed) = (p.c.m, p.c.r, p.c.closed);
    for j in chord_junctions(&p.c) {
        let w = p.c.edge(1, 3, j);
        p.add(w);
        let w = p.c.edge(m - 2, m, j);
        p.add(w);
    }
    if !closed {
        p.drop_edge(1, 2, 1)?;
        let w = p.c.at(2, 1).cols(&[1, 3]).done();
        p.add(w);
        p.drop_edge(2, 3, r + 1)?;
        let w = p.c.at(1, r + 1).cols(&[3, 2]).done();
        p.add(w);
        if m % 2 == 0 {
            p.drop_edge(m - 1, m, 1)?;
            let w = p.c.at(m - 2, 1).cols(&[m, m - 1]).done();
            p.add(w);
            p.drop_edge(m - 2, m - 1, r + 1)?;
            let w = p.c.at(m - 1, r + 1).cols(&[m - 2, m]).done();
            p.add(w);
        } else {
            p.drop_edge(m - 2, m - 1, 1)?;
            let w = p.c.at(m - 1, 1).cols(&[m - 2, m]).done();
            p.add(w);
            p.drop_edge(m - 1, m, r + 1)?;
            let w = p.c.at(m - 1, r + 1).cols(&[m, m - 2]).done();
            p.add(w);
        }
    }
    // pair chord singletons at consecutive junctions along the end rows
    let first = if closed && r % 2 == 0 { 1 } else { 2 };
    let js: Vec<usize> = (first..r).step_by(2).collect();
    for j in js {
        p.pair_chord(3, 1, j)?;
        p.pair_chord(m - 2, m, j)?;
    }
    if closed && r % 2 == 1 && r >= 3 {
        p.reroute_odd(true)?;
    }
    Ok(p.walks)
}
