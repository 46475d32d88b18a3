//! Independent certificate checks for path decompositions.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{norm, Graph, Vertex};

/// Outcome of [`verify_decomposition`]. `passed` holds exactly when
/// `failures` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub path_count: usize,
    pub bound: usize,
    pub failures: Vec<(String, String)>,
}

/// `⌈n/2⌉`, the bound every connected graph on `n` vertices is conjectured to
/// meet. For `G □ H` this is `⌈mn/2⌉`.
pub fn gallai_bound(n: usize) -> usize {
    n.div_ceil(2)
}

/// Checks that `paths` are simple paths of `g`, pairwise edge-disjoint,
/// cover every edge, and number at most `⌈n(g)/2⌉`.
pub fn verify_decomposition(g: &Graph, paths: &[Vec<Vertex>]) -> VerificationReport {
    verify_with_bound(g, paths, gallai_bound(g.n()))
}

/// As [`verify_decomposition`] with an explicit bound.
pub fn verify_with_bound(g: &Graph, paths: &[Vec<Vertex>], bound: usize) -> VerificationReport {
    let mut failures = Vec::new();
    let mut owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (i, p) in paths.iter().enumerate() {
        if p.len() < 2 {
            failures.push(("empty_path".to_string(), format!("path {i} has no edge")));
            continue;
        }
        let mut seen = HashMap::new();
        for (pos, &v) in p.iter().enumerate() {
            if v >= g.n() {
                failures.push(("vertex_range".to_string(), format!("path {i} visits {v}, outside 0..{}", g.n())));
                continue;
            }
            if let Some(first) = seen.insert(v, pos) {
                failures.push((
                    "repeated_vertex".to_string(),
                    format!("path {i} visits {v} at positions {first} and {pos}"),
                ));
            }
        }
        for w in p.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a >= g.n() || b >= g.n() {
                continue;
            }
            if !g.has_edge(a, b) {
                failures.push(("not_an_edge".to_string(), format!("path {i} steps {a}-{b}")));
                continue;
            }
            if let Some(j) = owner.insert(norm(a, b), i) {
                failures.push(("edge_reused".to_string(), format!("edge {a}-{b} in paths {j} and {i}")));
            }
        }
    }
    for &(a, b) in g.edges() {
        if !owner.contains_key(&(a, b)) {
            failures.push(("edge_uncovered".to_string(), format!("edge {a}-{b}")));
        }
    }
    if paths.len() > bound {
        failures.push(("bound".to_string(), format!("{} paths exceed the bound {bound}", paths.len())));
    }
    VerificationReport { passed: failures.is_empty(), path_count: paths.len(), bound, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_two_path_decomposition_passes() {
        let k4 = Graph::complete(4);
        let rep = verify_decomposition(&k4, &[vec![0, 3, 1, 2], vec![1, 0, 2, 3]]);
        assert!(rep.passed, "{:?}", rep.failures);
        assert_eq!(rep.path_count, 2);
    }

    #[test]
    fn c4_reused_and_uncovered() {
        let c4 = Graph::cycle(4);
        let rep = verify_decomposition(&c4, &[vec![0, 1, 2], vec![2, 3, 0], vec![0, 1]]);
        assert!(rep.failures.iter().any(|(k, _)| k == "edge_reused"));
        let rep = verify_decomposition(&c4, &[vec![0, 1, 2]]);
        let uncovered = rep.failures.iter().filter(|(k, _)| k == "edge_uncovered").count();
        assert_eq!(uncovered, 2);
        assert!(!rep.passed);
    }

    #[test]
    fn bound_and_shape_failures() {
        let p3 = Graph::path(3);
        let rep = verify_decomposition(&p3, &[vec![0, 1], vec![1, 2]]);
        assert!(rep.passed);
        let rep = verify_with_bound(&p3, &[vec![0, 1], vec![1, 2]], 1);
        assert!(rep.failures.iter().any(|(k, _)| k == "bound"));
        let rep = verify_decomposition(&Graph::cycle(3), &[vec![0, 1, 2, 0]]);
        assert!(rep.failures.iter().any(|(k, _)| k == "repeated_vertex"));
        let rep = verify_decomposition(&p3, &[vec![0, 2], vec![0, 1, 2]]);
        assert!(rep.failures.iter().any(|(k, _)| k == "not_an_edge"));
    }
}
