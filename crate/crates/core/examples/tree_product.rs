//! A tree split into all-real paths, and its product with `P3`.

use gallai_product::structured::{tree_decompose, tree_vr_decomposition, verify_product, Piece};
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    let t = Graph::new(8, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6), (2, 7)])?;
    let plan = tree_vr_decomposition(&t)?;
    for piece in &plan.pieces {
        if let Piece::Component(c) = piece {
            println!("path {:?}", c.vertices);
        }
    }
    let h = Graph::path(3);
    let d = tree_decompose(&t, &h)?;
    let report = verify_product(&t, &h, &d);
    println!("T x P3: {} paths, bound {}, verified {}", d.len(), report.bound, report.passed);
    Ok(())
}
