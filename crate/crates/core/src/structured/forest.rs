//! Path decompositions of forests with prescribed transitions.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::plan::{realize, Draft, VRPlan};

/// A constraint on how paths pass a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Force {
    /// The edges `at-a` and `at-b` are consecutive on one path.
    Through { at: Vertex, a: Vertex, b: Vertex },
    /// A path ends at `at` with the edge `at-via`.
    End { at: Vertex, via: Vertex },
}

/// Splits the forest spanned by `edges` into paths with exactly one end at
/// each odd vertex and none at even vertices.
pub(crate) fn forest_paths(n: usize, edges: &[(Vertex, Vertex)], forced: &[Force]) -> Result<Vec<Vec<Vertex>>> {
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    // mate[v][i]: the neighbour paired with adj[v][i] at v
    let mut mate: Vec<Vec<Option<Vertex>>> = adj.iter().map(|a| vec![None; a.len()]).collect();
    let mut done: Vec<Vec<bool>> = adj.iter().map(|a| vec![false; a.len()]).collect();
    let slot = |adj: &Vec<Vec<Vertex>>, v: Vertex, w: Vertex| {
        adj[v].binary_search(&w).map_err(|_| Error::InvalidPlan(format!("{v}-{w} is not a forest edge")))
    };
    for f in forced {
        match *f {
            Force::Through { at, a, b } => {
                let (i, j) = (slot(&adj, at, a)?, slot(&adj, at, b)?);
                if done[at][i] || done[at][j] || i == j {
                    return Err(Error::InvalidPlan(format!("conflicting constraints at {at}")));
                }
                mate[at][i] = Some(b);
                mate[at][j] = Some(a);
                done[at][i] = true;
                done[at][j] = true;
            }
            Force::End { at, via } => {
                let i = slot(&adj, at, via)?;
                if done[at][i] || adj[at].len().is_multiple_of(2) {
                    return Err(Error::InvalidPlan(format!("no path can end at {at}")));
                }
                done[at][i] = true;
            }
        }
    }
    for v in 0..n {
        let open: Vec<usize> = (0..adj[v].len()).filter(|&i| !done[v][i]).collect();
        for pair in open.chunks(2) {
            if let [i, j] = *pair {
                mate[v][i] = Some(adj[v][j]);
                mate[v][j] = Some(adj[v][i]);
            }
        }
    }
    let mut used: Vec<Vec<bool>> = adj.iter().map(|a| vec![false; a.len()]).collect();
    let mut paths = Vec::new();
    for v in 0..n {
        for i in 0..adj[v].len() {
            if used[v][i] || mate[v][i].is_some() {
                continue;
            }
            let mut path = vec![v];
            let (mut cur, mut k) = (v, i);
            loop {
                let next = adj[cur][k];
                used[cur][k] = true;
                let back = slot(&adj, next, cur)?;
                used[next][back] = true;
                path.push(next);
                match mate[next][back] {
                    Some(w) => {
                        k = slot(&adj, next, w)?;
                        cur = next;
                    }
                    None => break,
                }
            }
            paths.push(path);
        }
    }
    if used.iter().flatten().any(|&u| !u) {
        return Err(Error::InvalidPlan("the edges do not form a forest".into()));
    }
    Ok(paths)
}

/// Forest paths that pieces can be taken from.
#[derive(Debug, Clone)]
pub(crate) struct Forest {
    slots: Vec<Option<Vec<Vertex>>>,
}

impl Forest {
    pub fn new(paths: Vec<Vec<Vertex>>) -> Self {
        Forest { slots: paths.into_iter().map(Some).collect() }
    }

    fn find(&self, pred: impl Fn(&[Vertex]) -> bool) -> Option<usize> {
        self.slots.iter().position(|s| s.as_deref().is_some_and(&pred))
    }

    /// Removes the path ending at `v`, oriented to finish there.
    pub fn take_end(&mut self, v: Vertex) -> Result<Vec<Vertex>> {
        let i = self
            .find(|p| p[0] == v || p[p.len() - 1] == v)
            .ok_or_else(|| Error::InvalidPlan(format!("no forest path ends at {v}")))?;
        let mut p = self.slots[i].take().unwrap();
        if p[0] == v {
            p.reverse();
        }
        Ok(p)
    }

    /// Removes a path passing through `v` and cuts it there.
    pub fn take_through(&mut self, v: Vertex) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
        let i = self
            .find(|p| p[1..p.len() - 1].contains(&v))
            .ok_or_else(|| Error::InvalidPlan(format!("no forest path passes {v}")))?;
        let p = self.slots[i].take().unwrap();
        let k = p.iter().position(|&x| x == v).unwrap();
        Ok((p[..=k].to_vec(), p[k..].to_vec()))
    }

    /// Removes the path using the edge `a-b`, oriented so `a` comes first.
    pub fn take_edge(&mut self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>> {
        let hit = |p: &[Vertex]| p.windows(2).any(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a));
        let i = self.find(hit).ok_or_else(|| Error::InvalidPlan(format!("no forest path uses {a}-{b}")))?;
        let mut p = self.slots[i].take().unwrap();
        if p.windows(2).any(|w| w[0] == b && w[1] == a) {
            p.reverse();
        }
        Ok(p)
    }

    pub fn rest(self) -> Vec<Vec<Vertex>> {
        self.slots.into_iter().flatten().collect()
    }
}

/// Splits a tree into `n_o/2` all-real-ended paths, where `n_o` counts
/// odd-degree vertices.
pub fn tree_vr_decomposition(t: &Graph) -> Result<VRPlan> {
    if !t.is_connected() {
        return Err(Error::Disconnected);
    }
    if t.m() + 1 != t.n() {
        return Err(Error::InvalidComponent("not a tree".into()));
    }
    let paths = forest_paths(t.n(), t.edges(), &[])?;
    realize(t, paths.into_iter().map(Draft::Path).collect(), "tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider_gives_half_the_odd_vertices() {
        let plan = tree_vr_decomposition(&Graph::star(3)).unwrap();
        assert_eq!(plan.pieces.len(), 2);
        assert_eq!(tree_vr_decomposition(&Graph::star(5)).unwrap().pieces.len(), 3);
        let t = Graph::new(7, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let odd = (0..7).filter(|&v| t.degree(v) % 2 == 1).count();
        assert_eq!(tree_vr_decomposition(&t).unwrap().pieces.len(), odd / 2);
    }

    #[test]
    fn forced_transitions_hold() {
        let edges = [(0, 1), (1, 2), (1, 3), (1, 4)];
        let p = forest_paths(5, &edges, &[Force::Through { at: 1, a: 0, b: 4 }]).unwrap();
        assert!(p.iter().any(|q| q == &vec![0, 1, 4] || q == &vec![4, 1, 0]));
        let p = forest_paths(4, &[(0, 1), (1, 2), (1, 3)], &[Force::End { at: 1, via: 2 }]).unwrap();
        assert!(p.iter().any(|q| q == &vec![1, 2] || q == &vec![2, 1]));
        assert!(forest_paths(3, &[(0, 1), (1, 2)], &[Force::End { at: 1, via: 2 }]).is_err());
    }

    #[test]
    fn forest_take() {
        let mut f = Forest::new(vec![vec![0, 1, 2, 3], vec![4, 5]]);
        assert_eq!(f.take_through(2).unwrap(), (vec![0, 1, 2], vec![2, 3]));
        assert_eq!(f.take_end(4).unwrap(), vec![5, 4]);
        assert!(f.take_end(0).is_err());
    }
}
