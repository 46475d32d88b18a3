//! Exact minimum path decompositions of small graphs, and a subdivision
//! check.

use gallai_product::catalog::named;
use gallai_product::oracle::{min_path_decomposition, subdivision_invariance_check, DEFAULT_ORACLE_BUDGET};

fn main() -> gallai_product::Result<()> {
    for name in ["P6", "C7", "K4", "K5", "S5", "paw", "bowtie", "diamond"] {
        let g = named(name).expect("known name");
        let r = min_path_decomposition(&g, DEFAULT_ORACLE_BUDGET)?;
        println!("p({name}) = {} (lower bound {}, {} nodes) {:?}", r.value, r.lower_bound, r.nodes, r.paths);
    }
    let k4 = named("K4").expect("known name");
    println!("subdividing K4 keeps p: {}", subdivision_invariance_check(&k4, 2, 7, DEFAULT_ORACLE_BUDGET)?);
    Ok(())
}
