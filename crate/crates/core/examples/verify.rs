//! The verifier accepts a correct decomposition and names what is wrong with
//! a damaged one.

use gallai_product::structured::{decompose, verify_product};
use gallai_product::Graph;

fn main() -> gallai_product::Result<()> {
    let (g, h) = (Graph::cycle(4), Graph::path(3));
    let d = decompose(&g, &h)?;
    println!("intact: {:?}", verify_product(&g, &h, &d));

    let mut dropped = d.clone();
    dropped.paths.pop();
    println!("path removed: {:?}", verify_product(&g, &h, &dropped).failures);

    let mut doubled = d.clone();
    doubled.paths.push(d.paths[0].clone());
    println!("path repeated: {:?}", verify_product(&g, &h, &doubled).failures);
    Ok(())
}
