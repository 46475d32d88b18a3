//! Plans for unicyclic and bicyclic graphs, one function per core shape.
//!
//! Every function removes the cycle edges, splits the remaining forest
//! into paths with one end per odd vertex, then glues forest paths to
//! cycle arcs according to the parities around the cycles.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{norm, Graph, Vertex};

use super::core::{core_structure, Core};
use super::forest::{forest_paths, Force, Forest};
use super::plan::{arc, chain, realize, Draft, VRPlan};

/// Choices a proof leaves open: which qualifying vertex to use and how
/// each cycle is oriented.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct Variant {
    pub pick: usize,
    pub flip: [bool; 2],
}

impl Variant {
    pub fn all() -> Vec<Variant> {
        let mut out = Vec::new();
        for pick in 0..3 {
            for f in 0..4 {
                out.push(Variant { pick, flip: [f & 1 == 1, f & 2 == 2] });
            }
        }
        out
    }

    fn choose(&self, list: &[Vertex], k: usize) -> Vec<Vertex> {
        (0..k).map(|i| list[(self.pick + i) % list.len()]).collect()
    }
}

fn oriented(c: &[Vertex], flip: bool) -> Vec<Vertex> {
    let mut out = c.to_vec();
    if flip {
        out[1..].reverse();
    }
    out
}

fn closed(c: &[Vertex]) -> Vec<Vertex> {
    let mut out = c.to_vec();
    out.push(c[0]);
    out
}

fn cut(p: &[Vertex], v: Vertex) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let k = p.iter().position(|&x| x == v).ok_or_else(|| Error::InvalidPlan(format!("{v} is not on {p:?}")))?;
    Ok((p[..=k].to_vec(), p[k..].to_vec()))
}

struct Builder<'g> {
    g: &'g Graph,
    deg: Vec<usize>,
    forest: Forest,
    drafts: Vec<Draft>,
}

impl<'g> Builder<'g> {
    /// `G' = G` minus the edges of `walks`.
    fn new(g: &'g Graph, walks: &[&[Vertex]], forced: &[Force]) -> Result<Self> {
        let removed: BTreeSet<(Vertex, Vertex)> =
            walks.iter().flat_map(|w| w.windows(2).map(|e| norm(e[0], e[1]))).collect();
        let rest: Vec<(Vertex, Vertex)> = g.edges().iter().copied().filter(|e| !removed.contains(e)).collect();
        let mut deg = vec![0; g.n()];
        for &(a, b) in &rest {
            deg[a] += 1;
            deg[b] += 1;
        }
        let forest = Forest::new(forest_paths(g.n(), &rest, forced)?);
        Ok(Builder { g, deg, forest, drafts: Vec::new() })
    }

    /// Parity in `G'`.
    fn odd(&self, v: Vertex) -> bool {
        self.deg[v] % 2 == 1
    }

    fn odd_on(&self, vs: &[Vertex]) -> Vec<Vertex> {
        vs.iter().copied().filter(|&v| self.odd(v)).collect()
    }

    fn end(&mut self, v: Vertex) -> Result<Vec<Vertex>> {
        self.forest.take_end(v)
    }

    fn path(&mut self, parts: &[&[Vertex]]) -> Result<()> {
        self.drafts.push(Draft::Path(chain(parts)?));
        Ok(())
    }

    fn cycle(&mut self, c: &[Vertex]) {
        self.drafts.push(Draft::Cycle(c.to_vec()));
    }

    fn special(&mut self, walks: &[&[Vertex]]) {
        self.drafts.push(Draft::Special(walks.iter().map(|w| w.to_vec()).collect()));
    }

    fn finish(self, tag: &str) -> Result<VRPlan> {
        let mut drafts = self.drafts;
        drafts.extend(self.forest.rest().into_iter().map(Draft::Path));
        realize(self.g, drafts, tag)
    }
}

pub(crate) fn unicyclic_plan(g: &Graph, var: Variant) -> Result<VRPlan> {
    let c = match core_structure(g)? {
        Core::Cycle(c) => oriented(&c, var.flip[0]),
        _ => return Err(Error::InvalidComponent("expected exactly one cycle".into())),
    };
    if c.len() == g.n() {
        return realize(g, vec![Draft::Cycle(c)], "unicyclic/cycle");
    }
    let cc = closed(&c);
    let mut b = Builder::new(g, &[&cc], &[])?;
    let odd = b.odd_on(&c);
    match odd.len() {
        0 => {
            b.cycle(&c);
            b.finish("unicyclic/even")
        }
        1 => {
            let p = b.end(odd[0])?;
            b.special(&[&cc, &p]);
            b.finish("unicyclic/case2")
        }
        _ => {
            let u = var.choose(&odd, 2);
            let (p1, p2) = (b.end(u[0])?, b.end(u[1])?);
            b.path(&[&p1, &arc(&c, u[0], u[1])?])?;
            b.path(&[&p2, &arc(&c, u[1], u[0])?])?;
            b.finish("unicyclic/case1")
        }
    }
}

pub(crate) fn bicyclic_plan(g: &Graph, var: Variant) -> Result<VRPlan> {
    match core_structure(g)? {
        Core::Disjoint { c1, c2, link } => disjoint(g, c1, c2, link, var),
        Core::Touching { c1, c2 } => touching(g, c1, c2, var),
        Core::Theta { paths } => theta(g, paths, var),
        Core::Cycle(_) => Err(Error::InvalidComponent("expected two cycles".into())),
    }
}

/// Cycles `c1`, `c2` joined by `link` from `c1[0]` to `c2[0]`.
fn disjoint(g: &Graph, c1: Vec<Vertex>, c2: Vec<Vertex>, link: Vec<Vertex>, var: Variant) -> Result<VRPlan> {
    let (cc1, cc2) = (closed(&c1), closed(&c2));
    let mut forced: Vec<Force> = link.windows(3).map(|w| Force::Through { at: w[1], a: w[0], b: w[2] }).collect();
    let (u1, v1) = (link[0], link[link.len() - 1]);
    let end_force = |at: Vertex, via: Vertex| {
        let d = g.degree(at) - 2;
        (d % 2 == 1).then_some(Force::End { at, via })
    };
    forced.extend(end_force(u1, link[1]));
    forced.extend(end_force(v1, link[link.len() - 2]));
    let mut b = Builder::new(g, &[&cc1, &cc2], &forced)?;

    let (mut c1, mut c2, mut link) = (c1, c2, link);
    let (o1, o2) = (b.odd_on(&c1[1..]), b.odd_on(&c2[1..]));
    let (pu, pv) = (b.odd(c1[0]), b.odd(c2[0]));
    let swap = match (o1.is_empty(), o2.is_empty()) {
        (true, false) => true,
        (false, false) => pu && !pv,
        (true, true) => (pu && !pv) || (pu && pv && c1.len() == 3 && c2.len() > 3),
        (false, true) => false,
    };
    let (o1, o2) = if swap {
        std::mem::swap(&mut c1, &mut c2);
        link.reverse();
        (o2, o1)
    } else {
        (o1, o2)
    };
    let c1 = oriented(&c1, var.flip[0]);
    let c2 = oriented(&c2, var.flip[1]);
    let (cc1, cc2) = (closed(&c1), closed(&c2));
    let (u1, v1) = (c1[0], c2[0]);
    let (pu, pv) = (b.odd(u1), b.odd(v1));
    let parity = |p: bool, q: bool| match (p, q) {
        (false, false) => "even-even",
        (true, true) => "odd-odd",
        (false, true) => "even-odd",
        (true, false) => "odd-even",
    };
    let par = parity(pu, pv);
    // the forest path carrying the link, oriented from u1's side
    let carrier = |b: &mut Builder| b.forest.take_edge(u1, link[1]);

    if !o1.is_empty() && !o2.is_empty() {
        let (u2, v2) = (var.choose(&o1, 1)[0], var.choose(&o2, 1)[0]);
        match (pu, pv) {
            (false, false) => {
                let p = carrier(&mut b)?;
                let (xu, rest) = cut(&p, u1)?;
                let (_, vy) = cut(&rest, v1)?;
                let (p2, q2) = (b.end(u2)?, b.end(v2)?);
                b.path(&[&p2, &arc(&c1, u2, u1)?, &link, &arc(&c2, v1, v2)?, &q2])?;
                b.path(&[&xu, &arc(&c1, u1, u2)?])?;
                b.path(&[&arc(&c2, v2, v1)?, &vy])?;
                b.finish("bicyclic/shared0/case1.1/even-even")
            }
            (true, true) => {
                carrier(&mut b)?;
                let (p2, q2) = (b.end(u2)?, b.end(v2)?);
                b.path(&[&p2, &arc(&c1, u1, u2)?])?;
                b.path(&[&arc(&c1, u2, u1)?, &link, &arc(&c2, v2, v1)?])?;
                b.path(&[&arc(&c2, v1, v2)?, &q2])?;
                b.finish("bicyclic/shared0/case1.1/odd-odd")
            }
            _ => {
                let pxv = carrier(&mut b)?;
                let q2 = b.end(v2)?;
                b.path(&[&pxv, &arc(&c2, v1, v2)?])?;
                b.path(&[&q2, &arc(&c2, v2, v1)?])?;
                if o1.len() >= 2 {
                    let u = var.choose(&o1, 2);
                    let (p2, p3) = (b.end(u[0])?, b.end(u[1])?);
                    b.path(&[&p2, &arc(&c1, u[0], u[1])?])?;
                    b.path(&[&p3, &arc(&c1, u[1], u[0])?])?;
                    b.finish("bicyclic/shared0/case1.1/even-odd/paths")
                } else {
                    let p2 = b.end(u2)?;
                    b.special(&[&cc1, &p2]);
                    b.finish("bicyclic/shared0/case1.1/even-odd/tadpole")
                }
            }
        }
    } else if o1.len() >= 2 {
        let u = var.choose(&o1, 2);
        let (p2, p3) = (b.end(u[0])?, b.end(u[1])?);
        b.path(&[&p2, &arc(&c1, u[0], u[1])?])?;
        b.path(&[&p3, &arc(&c1, u[1], u[0])?])?;
        match (pu, pv) {
            (_, false) => b.cycle(&c2),
            (_, true) => {
                let p = carrier(&mut b)?;
                b.special(&[&p, &cc2]);
            }
        }
        b.finish(&format!("bicyclic/shared0/case1.2/{par}"))
    } else if o1.len() == 1 {
        let u2 = o1[0];
        match (pu, pv) {
            (false, false) => {
                let p = carrier(&mut b)?;
                let (xu, uy) = cut(&p, u1)?;
                let p2 = b.end(u2)?;
                b.path(&[&p2, &arc(&c1, u2, u1)?, &uy])?;
                b.path(&[&arc(&c1, u1, u2)?, &xu])?;
                b.cycle(&c2);
            }
            (true, true) => {
                carrier(&mut b)?;
                let p2 = b.end(u2)?;
                b.path(&[&p2, &arc(&c1, u1, u2)?])?;
                b.special(&[&arc(&c1, u2, u1)?, &link, &cc2]);
            }
            (false, true) => {
                let pxv = carrier(&mut b)?;
                let p2 = b.end(u2)?;
                b.special(&[&cc1, &p2]);
                b.special(&[&pxv, &cc2]);
            }
            (true, false) => {
                let puy = carrier(&mut b)?;
                let p2 = b.end(u2)?;
                b.path(&[&p2, &arc(&c1, u2, u1)?, &puy])?;
                b.path(&[&arc(&c1, u1, u2)?])?;
                b.cycle(&c2);
            }
        }
        b.finish(&format!("bicyclic/shared0/case1.3/{par}"))
    } else {
        let tag = match (pu, pv) {
            (false, false) => {
                b.cycle(&c1);
                b.cycle(&c2);
                "even-even"
            }
            (false, true) => {
                let pxv = carrier(&mut b)?;
                b.cycle(&c1);
                b.special(&[&pxv, &cc2]);
                "even-odd"
            }
            _ => {
                carrier(&mut b)?;
                if c1.len() >= 4 {
                    b.cycle(&c1);
                    b.special(&[&link, &cc2]);
                    "odd-odd/long"
                } else {
                    b.special(&[&cc1, &link, &cc2]);
                    "odd-odd/dumbbell"
                }
            }
        };
        b.finish(&format!("bicyclic/shared0/case2/{tag}"))
    }
}

/// Cycles sharing the single vertex `c1[0] == c2[0]`.
fn touching(g: &Graph, c1: Vec<Vertex>, c2: Vec<Vertex>, var: Variant) -> Result<VRPlan> {
    let (cc1, cc2) = (closed(&c1), closed(&c2));
    let mut b = Builder::new(g, &[&cc1, &cc2], &[])?;
    let (mut c1, mut c2) = (c1, c2);
    if b.odd_on(&c1[1..]).is_empty() && !b.odd_on(&c2[1..]).is_empty() {
        std::mem::swap(&mut c1, &mut c2);
    }
    let both_even = b.odd_on(&c1[1..]).is_empty();
    if both_even && c1.len() == 3 && c2.len() > 3 {
        std::mem::swap(&mut c1, &mut c2);
    }
    let c1 = oriented(&c1, var.flip[0]);
    let c2 = oriented(&c2, var.flip[1]);
    let (cc1, cc2) = (closed(&c1), closed(&c2));
    let (o1, o2) = (b.odd_on(&c1[1..]), b.odd_on(&c2[1..]));
    let u1 = c1[0];
    let center = if b.odd(u1) { "odd-center" } else { "even-center" };
    let (l1, l2) = (c1.len(), c2.len());

    if !o1.is_empty() && !o2.is_empty() {
        let (u2, v2) = (var.choose(&o1, 1)[0], var.choose(&o2, 1)[0]);
        let (p2, q2) = (b.end(u2)?, b.end(v2)?);
        b.path(&[&p2, &arc(&c1, u2, u1)?, &arc(&c2, u1, v2)?])?;
        b.path(&[&q2, &arc(&c2, v2, u1)?, &arc(&c1, u1, u2)?])?;
        return b.finish("bicyclic/shared1/case1.1");
    }
    if o1.len() >= 2 {
        let u = var.choose(&o1, 2);
        let (p2, p3) = (b.end(u[0])?, b.end(u[1])?);
        b.path(&[&p2, &arc(&c1, u[0], u[1])?])?;
        b.path(&[&p3, &arc(&c1, u[1], u[0])?])?;
        let tag = if !b.odd(u1) {
            b.cycle(&c2);
            "even-center"
        } else if l2 >= 4 {
            b.cycle(&c2);
            "odd-center/long"
        } else {
            let p1 = b.end(u1)?;
            b.special(&[&cc2, &p1]);
            "odd-center/triangle"
        };
        return b.finish(&format!("bicyclic/shared1/case1.2/{tag}"));
    }
    if o1.len() == 1 {
        let u2 = o1[0];
        let p2 = b.end(u2)?;
        let tag = if l2 >= 4 {
            if b.odd(u1) {
                let p1 = b.end(u1)?;
                b.path(&[&p1, &arc(&c1, u1, u2)?])?;
                b.path(&[&p2, &arc(&c1, u2, u1)?])?;
            } else {
                b.special(&[&cc1, &p2]);
            }
            b.cycle(&c2);
            format!("long/{center}")
        } else if l1 >= 4 {
            b.special(&[&cc1, &p2]);
            if b.odd(u1) {
                let p1 = b.end(u1)?;
                b.special(&[&cc2, &p1]);
            } else {
                b.cycle(&c2);
            }
            format!("triangle/long/{center}")
        } else if b.odd(u1) {
            let p1 = b.end(u1)?;
            b.path(&[&p2, &arc(&c1, u2, u1)?, &p1])?;
            b.special(&[&arc(&c1, u1, u2)?, &cc2]);
            format!("triangle/triangle/{center}")
        } else {
            b.special(&[&cc1, &cc2, &p2]);
            format!("triangle/triangle/{center}")
        };
        return b.finish(&format!("bicyclic/shared1/case1.3/{tag}"));
    }
    let deep = |b: &Builder, c: &[Vertex]| c[1..].iter().copied().filter(|&v| b.deg[v] >= 2).collect::<Vec<_>>();
    let (d1, d2) = (deep(&b, &c1), deep(&b, &c2));
    if !d1.is_empty() && !d2.is_empty() {
        let (ui, vj) = (var.choose(&d1, 1)[0], var.choose(&d2, 1)[0]);
        let (xu, uy) = b.forest.take_through(ui)?;
        let (zv, vw) = b.forest.take_through(vj)?;
        b.path(&[&xu, &arc(&c1, ui, u1)?, &arc(&c2, u1, vj)?, &zv])?;
        b.path(&[&uy, &arc(&c1, u1, ui)?, &arc(&c2, vj, u1)?, &vw])?;
        return b.finish("bicyclic/shared1/case2.1");
    }
    let tag = if l1 >= 4 {
        b.cycle(&c1);
        if b.odd(u1) {
            let p1 = b.end(u1)?;
            b.special(&[&cc2, &p1]);
        } else {
            b.cycle(&c2);
        }
        format!("long/{center}")
    } else if b.odd(u1) {
        let split = [c1[1], c1[2], u1, c2[2], c2[1], u1];
        b.cycle(&split);
        format!("triangles/{center}")
    } else {
        b.special(&[&cc1, &cc2]);
        format!("triangles/{center}")
    };
    b.finish(&format!("bicyclic/shared1/case2.2/{tag}"))
}

/// Three internally disjoint paths between two branch vertices.
fn theta(g: &Graph, paths: [Vec<Vertex>; 3], var: Variant) -> Result<VRPlan> {
    let walks: Vec<&[Vertex]> = paths.iter().map(Vec::as_slice).collect();
    let mut b = Builder::new(g, &walks, &[])?;
    let mut paths = paths.to_vec();
    paths.sort_by(|p, q| (p.len(), p).cmp(&(q.len(), q)));
    let (u1, ut) = (paths[0][0], paths[0][paths[0].len() - 1]);
    if b.odd(ut) && !b.odd(u1) {
        for p in &mut paths {
            p.reverse();
        }
    }
    if var.flip[0] {
        paths.swap(1, 2);
    }
    let q1 = paths[0].clone();
    let (mut pa, mut pb) = (paths[1].clone(), paths[2].clone());
    let (u1, ut) = (q1[0], q1[q1.len() - 1]);
    let mut c = pa.clone();
    c.extend(pb[1..pb.len() - 1].iter().rev());
    let inner: Vec<Vertex> = pa[1..pa.len() - 1].iter().chain(&pb[1..pb.len() - 1]).copied().collect();
    let odd_inner = b.odd_on(&inner);
    let ends = match (b.odd(u1), b.odd(ut)) {
        (true, true) => "both-odd",
        (true, false) => "one-odd",
        _ => "even",
    };
    // the part built around Q1 when nothing else claims it
    let q_part = |b: &mut Builder| -> Result<()> {
        match ends {
            "both-odd" => {
                let (p1, pt) = (b.end(u1)?, b.end(ut)?);
                b.path(&[&p1, &q1, &pt])
            }
            "one-odd" => {
                let p1 = b.end(u1)?;
                b.path(&[&p1, &q1])
            }
            _ => b.path(&[&q1]),
        }
    };
    match odd_inner.len() {
        0 => {
            if ends != "even" {
                q_part(&mut b)?;
                b.cycle(&c);
                b.finish(&format!("bicyclic/shared2/case2.1/{ends}"))
            } else if inner.len() >= 3 {
                b.path(&[&q1])?;
                b.cycle(&c);
                b.finish("bicyclic/shared2/case2.1/even/cycle")
            } else {
                b.special(&[&q1, &pa, &pb]);
                b.finish("bicyclic/shared2/case2.1/even/family")
            }
        }
        1 => {
            let a = odd_inner[0];
            if !pa.contains(&a) {
                std::mem::swap(&mut pa, &mut pb);
            }
            let (seg2, seg1) = cut(&pa, a)?;
            let pa_end = b.end(a)?;
            match ends {
                "both-odd" => {
                    let (p1, pt) = (b.end(u1)?, b.end(ut)?);
                    b.path(&[&p1, &q1, &seg1])?;
                    b.path(&[&pa_end, &seg2, &pb, &pt])?;
                    b.finish("bicyclic/shared2/case2.3/both-odd")
                }
                "one-odd" => {
                    let p1 = b.end(u1)?;
                    b.path(&[&p1, &q1, &seg1])?;
                    b.path(&[&pa_end, &seg2, &pb])?;
                    b.finish("bicyclic/shared2/case2.3/one-odd")
                }
                _ if inner.len() >= 3 => {
                    b.path(&[&q1])?;
                    b.special(&[&closed(&c), &pa_end]);
                    b.finish("bicyclic/shared2/case2.3/even/tadpole")
                }
                _ => {
                    b.special(&[&q1, &pa, &pb, &pa_end]);
                    b.finish("bicyclic/shared2/case2.3/even/family")
                }
            }
        }
        _ => {
            let s = var.choose(&odd_inner, 2);
            let (pa_end, pb_end) = (b.end(s[0])?, b.end(s[1])?);
            b.path(&[&pa_end, &arc(&c, s[0], s[1])?])?;
            b.path(&[&pb_end, &arc(&c, s[1], s[0])?])?;
            q_part(&mut b)?;
            b.finish(&format!("bicyclic/shared2/case2.2/{ends}"))
        }
    }
}

/// Every branch tag the unicyclic planner can emit.
pub const UNICYCLIC_BRANCHES: &[&str] = &["unicyclic/cycle", "unicyclic/even", "unicyclic/case1", "unicyclic/case2"];

/// Every branch tag the bicyclic planner can emit.
pub const BICYCLIC_BRANCHES: &[&str] = &[
    "bicyclic/shared0/case1.1/even-even",
    "bicyclic/shared0/case1.1/odd-odd",
    "bicyclic/shared0/case1.1/even-odd/paths",
    "bicyclic/shared0/case1.1/even-odd/tadpole",
    "bicyclic/shared0/case1.2/even-even",
    "bicyclic/shared0/case1.2/odd-odd",
    "bicyclic/shared0/case1.2/even-odd",
    "bicyclic/shared0/case1.2/odd-even",
    "bicyclic/shared0/case1.3/even-even",
    "bicyclic/shared0/case1.3/odd-odd",
    "bicyclic/shared0/case1.3/even-odd",
    "bicyclic/shared0/case1.3/odd-even",
    "bicyclic/shared0/case2/even-even",
    "bicyclic/shared0/case2/even-odd",
    "bicyclic/shared0/case2/odd-odd/long",
    "bicyclic/shared0/case2/odd-odd/dumbbell",
    "bicyclic/shared1/case1.1",
    "bicyclic/shared1/case1.2/even-center",
    "bicyclic/shared1/case1.2/odd-center/long",
    "bicyclic/shared1/case1.2/odd-center/triangle",
    "bicyclic/shared1/case1.3/long/odd-center",
    "bicyclic/shared1/case1.3/long/even-center",
    "bicyclic/shared1/case1.3/triangle/long/odd-center",
    "bicyclic/shared1/case1.3/triangle/long/even-center",
    "bicyclic/shared1/case1.3/triangle/triangle/odd-center",
    "bicyclic/shared1/case1.3/triangle/triangle/even-center",
    "bicyclic/shared1/case2.1",
    "bicyclic/shared1/case2.2/long/odd-center",
    "bicyclic/shared1/case2.2/long/even-center",
    "bicyclic/shared1/case2.2/triangles/odd-center",
    "bicyclic/shared1/case2.2/triangles/even-center",
    "bicyclic/shared2/case2.1/both-odd",
    "bicyclic/shared2/case2.1/one-odd",
    "bicyclic/shared2/case2.1/even/cycle",
    "bicyclic/shared2/case2.1/even/family",
    "bicyclic/shared2/case2.2/both-odd",
    "bicyclic/shared2/case2.2/one-odd",
    "bicyclic/shared2/case2.2/even",
    "bicyclic/shared2/case2.3/both-odd",
    "bicyclic/shared2/case2.3/one-odd",
    "bicyclic/shared2/case2.3/even/tadpole",
    "bicyclic/shared2/case2.3/even/family",
];

/// Proof-level cases; every tag above refines exactly one of them.
pub const PROOF_BRANCHES: &[&str] = &[
    "unicyclic/cycle",
    "unicyclic/even",
    "unicyclic/case1",
    "unicyclic/case2",
    "bicyclic/shared0/case1.1",
    "bicyclic/shared0/case1.2",
    "bicyclic/shared0/case1.3",
    "bicyclic/shared0/case2",
    "bicyclic/shared1/case1.1",
    "bicyclic/shared1/case1.2",
    "bicyclic/shared1/case1.3",
    "bicyclic/shared1/case2.1",
    "bicyclic/shared1/case2.2",
    "bicyclic/shared2/case2.1",
    "bicyclic/shared2/case2.2",
    "bicyclic/shared2/case2.3",
];

/// The proof-level case a branch tag belongs to.
pub fn proof_branch(tag: &str) -> Option<&'static str> {
    PROOF_BRANCHES.iter().copied().find(|b| tag == *b || tag.strip_prefix(b).is_some_and(|rest| rest.starts_with('/')))
}
