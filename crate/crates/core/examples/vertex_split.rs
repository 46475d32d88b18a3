//! Splitting the centre of a bowtie turns it into a 6-cycle.

use gallai_product::classify::classify;
use gallai_product::structured::split_vertex;
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])?;
    for (keep, moved) in [(vec![1, 3], vec![2, 4]), (vec![1, 2], vec![3, 4])] {
        let g = split_vertex(&bowtie, 0, &keep, &moved)?;
        let class = classify(&g).map(|c| c.tag().name().to_string()).unwrap_or_else(|e| e.to_string());
        println!("keep {keep:?} move {moved:?}: {} vertices, {} edges, {class}", g.n(), g.m());
    }
    Ok(())
}
