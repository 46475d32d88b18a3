//! Products of the path-plus-chords families and tadpoles with `K3`, with the
//! per-component counts against their claims.

use gallai_product::base::gallai_base_decomposition;
use gallai_product::catalog::{family_graph, tadpole};
use gallai_product::classify::ClassTag;
use gallai_product::product::special_family_product;
use gallai_product::structured::verify_product;
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    let h = Graph::complete(3);
    let base = gallai_base_decomposition(&h)?;
    let mut gs = vec![
        family_graph(ClassTag::FamilyA, 6)?,
        family_graph(ClassTag::FamilyB, 6)?,
        family_graph(ClassTag::FamilyF, 5)?,
        family_graph(ClassTag::Dumbbell, 7)?,
    ];
    gs.push(tadpole(4, 2)?);
    for g in &gs {
        let d = special_family_product(g, &base)?;
        let report = verify_product(g, &h, &d);
        println!("{:<16} m={} paths={} bound={} verified={}", d.source, g.n(), d.len(), report.bound, report.passed);
        for part in &d.parts {
            println!(
                "    {:?} r={} count={} target={:?} via {:?}",
                part.kind, part.r, part.count, part.target, part.route
            );
        }
    }
    Ok(())
}
