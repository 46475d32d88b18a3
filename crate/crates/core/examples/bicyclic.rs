//! Plans for the three bicyclic cores: two disjoint cycles, two cycles
//! sharing a vertex, and a theta.

use gallai_product::structured::{bicyclic_decompose, bicyclic_plan, verify_product};
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    let h = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)])?;
    let graphs = [
        ("disjoint", Graph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])?),
        ("touching", Graph::new(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5)])?),
        ("theta", Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (3, 5)])?),
    ];
    for (name, g) in &graphs {
        let plan = bicyclic_plan(g)?;
        let d = bicyclic_decompose(g, &h)?;
        let report = verify_product(g, &h, &d);
        println!(
            "{name:<9} {:<34} pieces={} paths={} bound={} verified={}",
            plan.provenance,
            plan.pieces.len(),
            d.len(),
            report.bound,
            report.passed
        );
    }
    Ok(())
}
