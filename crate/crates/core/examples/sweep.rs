//! Runs a named grid (default `paths-cycles`) and prints the summary.
//!
//! `cargo run --release --example sweep -- theorems`

use clap::ValueEnum;
use gallai_product::sweep::{grid_instances, run_sweep, Grid};

fn main() -> gallai_product::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "paths-cycles".into());
    let grid = Grid::from_str(&name, true).map_err(gallai_product::Error::Usage)?;
    let report = run_sweep(&grid_instances(grid, 0)?);
    println!(
        "{} instances, {} passed, {} failed, max ratio {:.3}",
        report.instances, report.passed, report.failed, report.max_ratio
    );
    for (source, count) in &report.sources {
        println!("  {source:<36} {count}");
    }
    for (branch, count) in &report.coverage {
        println!("  {branch:<36} {count}");
    }
    for branch in report.dead_branches.iter().filter(|_| !report.coverage.is_empty()) {
        println!("  {branch:<36} not reached");
    }
    Ok(())
}
