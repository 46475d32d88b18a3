//! The 2-core of a graph with at most two independent cycles.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Core {
    Cycle(Vec<Vertex>),
    /// Vertex-disjoint cycles joined by `link`, which runs from `c1[0]` to `c2[0]`.
    Disjoint {
        c1: Vec<Vertex>,
        c2: Vec<Vertex>,
        link: Vec<Vertex>,
    },
    /// Cycles sharing exactly `c1[0] == c2[0]`.
    Touching {
        c1: Vec<Vertex>,
        c2: Vec<Vertex>,
    },
    /// Three internally disjoint paths between two branch vertices.
    Theta {
        paths: [Vec<Vertex>; 3],
    },
}

fn in_core(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

pub(crate) fn core_structure(g: &Graph) -> Result<Core> {
    let alive = in_core(g);
    let nbrs = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect() };
    let core: Vec<Vertex> = (0..g.n()).filter(|&v| alive[v]).collect();
    let branch: Vec<Vertex> = core.iter().copied().filter(|&v| nbrs(v).len() > 2).collect();
    // walks from `s` through `w` until a branch vertex or `s`
    let trace = |s: Vertex, w: Vertex| -> Vec<Vertex> {
        let mut out = vec![s, w];
        let (mut prev, mut cur) = (s, w);
        while cur != s && nbrs(cur).len() == 2 {
            let next = nbrs(cur).into_iter().find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
            out.push(cur);
        }
        out
    };
    let degs: Vec<usize> = branch.iter().map(|&b| nbrs(b).len()).collect();
    match (branch.as_slice(), degs.as_slice()) {
        ([], []) => {
            let &s = core.first().ok_or_else(|| Error::Unsupported("acyclic graph".into()))?;
            let mut c = trace(s, nbrs(s)[0]);
            c.pop();
            Ok(Core::Cycle(c))
        }
        ([c], [4]) => {
            let mut loops: Vec<Vec<Vertex>> = Vec::new();
            for w in nbrs(*c) {
                if loops.iter().any(|l| l.contains(&w)) {
                    continue;
                }
                let mut l = trace(*c, w);
                l.pop();
                loops.push(l);
            }
            let [c1, c2]: [Vec<Vertex>; 2] =
                loops.try_into().map_err(|_| Error::Unsupported("irregular core".into()))?;
            Ok(Core::Touching { c1, c2 })
        }
        ([a, b], [3, 3]) => {
            let walks: Vec<Vec<Vertex>> = nbrs(*a).into_iter().map(|w| trace(*a, w)).collect();
            if walks.iter().all(|w| w[w.len() - 1] == *b) {
                let [p, q, r]: [Vec<Vertex>; 3] = walks.try_into().unwrap();
                return Ok(Core::Theta { paths: [p, q, r] });
            }
            let link = walks.iter().find(|w| w[w.len() - 1] == *b).unwrap().clone();
            let mut c1 = walks.iter().find(|w| w[w.len() - 1] == *a).unwrap().clone();
            c1.pop();
            let back = link[link.len() - 2];
            let w2 = nbrs(*b).into_iter().find(|&x| x != back).unwrap();
            let mut c2 = trace(*b, w2);
            c2.pop();
            Ok(Core::Disjoint { c1, c2, link })
        }
        _ => Err(Error::Unsupported(format!("core with branch degrees {degs:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_each_shape() {
        let tadpole = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(core_structure(&tadpole).unwrap(), Core::Cycle(vec![0, 1, 2]));
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(matches!(core_structure(&bowtie).unwrap(), Core::Touching { .. }));
        let db = Graph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        match core_structure(&db).unwrap() {
            Core::Disjoint { c1, c2, link } => {
                assert_eq!((c1.len(), c2.len()), (3, 3));
                assert_eq!(link, vec![2, 3, 4]);
                assert_eq!((c1[0], c2[0]), (2, 4));
            }
            other => panic!("{other:?}"),
        }
        let diamond = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(matches!(core_structure(&diamond).unwrap(), Core::Theta { .. }));
    }
}
