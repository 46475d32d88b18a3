//! `C_m □ H` for a few small `H`, compared with the exact minimum.

use gallai_product::catalog::named;
use gallai_product::oracle::{min_path_decomposition, DEFAULT_ORACLE_BUDGET};
use gallai_product::product::cycle_product;
use gallai_product::structured::verify_product;
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    for (m, name) in [(3, "P2"), (4, "P3"), (5, "K3"), (3, "paw")] {
        let h = named(name).expect("known name");
        let d = cycle_product(m, &h, None)?;
        let g = Graph::cycle(m);
        let report = verify_product(&g, &h, &d);
        let exact = min_path_decomposition(&g.cartesian_product(&h), DEFAULT_ORACLE_BUDGET)
            .map(|r| r.value.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!("C{m} x {name}: {} paths, bound {}, p = {exact}, verified {}", d.len(), report.bound, report.passed);
    }
    Ok(())
}
