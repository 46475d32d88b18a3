//! The plan chosen for a unicyclic graph and the resulting product.

use gallai_product::structured::{unicyclic_decompose, unicyclic_plan, verify_product, Piece};
use gallai_product::Graph;

fn show(plan: &gallai_product::structured::VRPlan) {
    println!("branch {}", plan.provenance);
    for piece in &plan.pieces {
        match piece {
            Piece::Component(c) => {
                let marks: Vec<String> = c
                    .vertices
                    .iter()
                    .zip(&c.real)
                    .map(|(v, &r)| if r { format!("{v}") } else { format!("({v})") })
                    .collect();
                println!("    {:?} {}", c.kind, marks.join(" "));
            }
            Piece::Special(s) => println!("    {} real {:?}", s.family, s.real),
        }
    }
}

fn main() -> gallai_product::Result<()> {
    // a 4-cycle with pendant paths at two vertices
    let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (2, 6)])?;
    show(&unicyclic_plan(&g)?);
    let h = Graph::complete(4);
    let d = unicyclic_decompose(&g, &h)?;
    let report = verify_product(&g, &h, &d);
    println!("G x K4: {} paths, bound {}, verified {}", d.len(), report.bound, report.passed);
    Ok(())
}
