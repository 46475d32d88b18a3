//! Splits `K5` into odd-odd paths and trail groups, then checks the result.

use gallai_product::base::{gallai_base_decomposition, verify_base};
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    let h = Graph::complete(5);
    let d = gallai_base_decomposition(&h)?;
    println!("{} paths, stats {:?}", d.path_count(), d.stats);
    for p in &d.odd_odd {
        println!("odd-odd      {:?}", p.vertices);
    }
    for t in d.open_trails.iter().chain(&d.closed_trails) {
        let kind = if t.closed { "closed" } else { "open" };
        println!("{kind:<6} r={}  junctions {:?}", t.r(), t.junctions);
        for leg in &t.legs {
            println!("    leg {:?}", leg.vertices);
        }
    }
    let report = verify_base(&h, &d);
    println!("verified: {} (expected {} paths)", report.passed, report.expected_count);
    Ok(())
}
