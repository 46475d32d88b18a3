//! Writes `C3 □ P2` as Graphviz, colouring edges by path.

use gallai_product::dot::{parse_product_dot, product_dot};
use gallai_product::structured::decompose;
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    let (g, h) = (Graph::cycle(3), Graph::path(2));
    let d = decompose(&g, &h)?;
    let text = product_dot(&g, &h, &d);
    print!("{text}");
    let edges = parse_product_dot(&text)?;
    eprintln!("{} edges read back, {} paths", edges.len(), d.len());
    Ok(())
}
