//! Decompositions of `G □ H` for trees and for graphs with one or two
//! cycles, through plans of virtual-real paths, cycles and special
//! subgraphs.

mod cases;
mod core;
pub mod forest;
pub mod plan;

use crate::base::{base_decompositions, BaseDecomposition, DEFAULT_BASE_BUDGET};
use crate::classify::{classify, StructureClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{min_path_decomposition, DEFAULT_ORACLE_BUDGET};
use crate::product::{cycle_product, special_family_product, ProductDecomposition, ProductPath};
use crate::verify::{verify_decomposition, VerificationReport};

use cases::Variant;
pub use cases::{proof_branch, BICYCLIC_BRANCHES, PROOF_BRANCHES, UNICYCLIC_BRANCHES};
pub use forest::tree_vr_decomposition;
pub use plan::{split_vertex, CycleArc, Piece, SpecialPiece, VRPlan};

/// Base decompositions tried, in rank order, before giving up.
const BASE_ALTERNATIVES: usize = 4;

fn first_plan(mut build: impl FnMut(Variant) -> Result<VRPlan>) -> Result<VRPlan> {
    let mut first = None;
    for v in Variant::all() {
        match build(v) {
            Ok(p) => return Ok(p),
            Err(e) => {
                first.get_or_insert(e);
            }
        }
    }
    Err(first.expect("at least one variant"))
}

/// The plan for a graph with exactly one cycle.
pub fn unicyclic_plan(g: &Graph) -> Result<VRPlan> {
    first_plan(|v| cases::unicyclic_plan(g, v))
}

/// The plan for a connected graph with `e = n + 1`.
pub fn bicyclic_plan(g: &Graph) -> Result<VRPlan> {
    first_plan(|v| cases::bicyclic_plan(g, v))
}

/// Checks a decomposition of `G □ H` against `⌈mn/2⌉`.
pub fn verify_product(g: &Graph, h: &Graph, d: &ProductDecomposition) -> VerificationReport {
    verify_decomposition(&g.cartesian_product(h), &d.index_paths(h.n()))
}

fn bases(h: &Graph) -> Result<Vec<BaseDecomposition>> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    base_decompositions(h, BASE_ALTERNATIVES, DEFAULT_BASE_BUDGET)
}

fn rejected(report: &VerificationReport) -> Error {
    let (kind, witness) = report.failures.first().cloned().unwrap_or_default();
    Error::Construction(format!("decomposition rejected ({kind}: {witness})"))
}

/// Tries every plan variant against every base until one verifies.
fn planned(g: &Graph, h: &Graph, mut build: impl FnMut(Variant) -> Result<VRPlan>) -> Result<ProductDecomposition> {
    let bases = bases(h)?;
    let mut tried: Vec<VRPlan> = Vec::new();
    let mut last = None;
    for v in Variant::all() {
        let plan = match build(v) {
            Ok(p) => p,
            Err(e) => {
                last.get_or_insert(e);
                continue;
            }
        };
        if tried.contains(&plan) {
            continue;
        }
        for base in &bases {
            match plan.product(g, base) {
                Ok(d) => {
                    let report = verify_product(g, h, &d);
                    if report.passed {
                        return Ok(d);
                    }
                    log::warn!("{}: {}", plan.provenance, rejected(&report));
                    last = Some(rejected(&report));
                }
                Err(e) => last = Some(e),
            }
        }
        tried.push(plan);
    }
    Err(last.expect("at least one variant"))
}

/// As [`planned`] for constructions that only depend on the base.
fn direct(
    g: &Graph,
    h: &Graph,
    build: impl Fn(&BaseDecomposition) -> Result<ProductDecomposition>,
) -> Result<ProductDecomposition> {
    let mut last = None;
    for base in &bases(h)? {
        match build(base) {
            Ok(d) => {
                let report = verify_product(g, h, &d);
                if report.passed {
                    return Ok(d);
                }
                last = Some(rejected(&report));
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Construction("no base decomposition".into())))
}

fn mismatch(class: &StructureClass) -> Error {
    Error::InvalidComponent(format!("classification mismatch: {}", class.tag()))
}

/// `G □ H` for `G` with exactly one cycle.
pub fn unicyclic_decompose(g: &Graph, h: &Graph) -> Result<ProductDecomposition> {
    let class = classify(g)?;
    match class {
        StructureClass::Unicyclic { .. } | StructureClass::Tadpole { .. } | StructureClass::Cycle { .. } => {
            planned(g, h, |v| cases::unicyclic_plan(g, v))
        }
        _ => Err(mismatch(&class)),
    }
}

/// `G □ H` for connected `G` with `e = n + 1`.
pub fn bicyclic_decompose(g: &Graph, h: &Graph) -> Result<ProductDecomposition> {
    let class = classify(g)?;
    match class {
        StructureClass::Bicyclic { .. }
        | StructureClass::FamilyA { .. }
        | StructureClass::FamilyB { .. }
        | StructureClass::FamilyF { .. }
        | StructureClass::Dumbbell { .. } => planned(g, h, |v| cases::bicyclic_plan(g, v)),
        _ => Err(mismatch(&class)),
    }
}

/// `T □ H` for a tree `T`.
pub fn tree_decompose(t: &Graph, h: &Graph) -> Result<ProductDecomposition> {
    let plan = tree_vr_decomposition(t)?;
    planned(t, h, |_| Ok(plan.clone()))
}

fn cyclic_name(c: usize) -> String {
    match c {
        3 => "tricyclic".into(),
        4 => "tetracyclic".into(),
        5 => "pentacyclic".into(),
        _ => format!("cyclomatic number {c}"),
    }
}

/// `G □ K1` or `K1 □ H`: an exact decomposition of the nontrivial factor.
fn single_factor(f: &Graph, transpose: bool) -> Result<ProductDecomposition> {
    let r = min_path_decomposition(f, DEFAULT_ORACLE_BUDGET)?;
    let paths = r
        .paths
        .into_iter()
        .map(|p| ProductPath { vertices: p.into_iter().map(|v| if transpose { (0, v) } else { (v, 0) }).collect() })
        .collect();
    Ok(ProductDecomposition::new(paths, "single_factor", Vec::new()))
}

/// Decomposes `G □ H` by the class of `G`. The result is verified and has
/// at most `⌈mn/2⌉` paths.
pub fn decompose(g: &Graph, h: &Graph) -> Result<ProductDecomposition> {
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if h.n() == 1 {
        return single_factor(g, false);
    }
    if g.n() == 1 {
        return single_factor(h, true);
    }
    let class = classify(g)?;
    match class {
        StructureClass::Path { .. } => direct(g, h, |b| special_family_product(g, b)),
        StructureClass::Cycle { cycle } => direct(g, h, |b| Ok(relabel(cycle_product(g.n(), h, Some(b))?, &cycle))),
        StructureClass::Tree => tree_decompose(g, h),
        StructureClass::FamilyA { .. }
        | StructureClass::FamilyB { .. }
        | StructureClass::FamilyF { .. }
        | StructureClass::Dumbbell { .. }
        | StructureClass::Tadpole { .. } => direct(g, h, |b| special_family_product(g, b)),
        StructureClass::Unicyclic { .. } => unicyclic_decompose(g, h),
        StructureClass::Bicyclic { .. } => bicyclic_decompose(g, h),
        StructureClass::Other { cyclomatic } => Err(Error::Unsupported(cyclic_name(cyclomatic))),
    }
}

fn relabel(d: ProductDecomposition, order: &[usize]) -> ProductDecomposition {
    let paths = d
        .paths
        .into_iter()
        .map(|p| ProductPath { vertices: p.vertices.into_iter().map(|(u, y)| (order[u], y)).collect() })
        .collect();
    ProductDecomposition::new(paths, d.source, d.parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tricyclic_is_unsupported() {
        let err = decompose(&Graph::complete(4), &Graph::path(2)).unwrap_err();
        assert_eq!(err, Error::Unsupported("tricyclic".into()));
    }

    #[test]
    fn small_grid() {
        let d = decompose(&Graph::path(3), &Graph::path(3)).unwrap();
        assert!(d.len() <= 4);
    }

    #[test]
    fn single_vertex_factor() {
        let d = decompose(&Graph::cycle(4), &Graph::empty(1)).unwrap();
        assert_eq!(d.len(), 2);
    }
}
