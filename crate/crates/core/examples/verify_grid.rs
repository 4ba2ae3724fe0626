//! Runs the consistency suites over a small parameter grid.

use orbimap::verify::{verify_grid, Grid, VerifyOptions};

fn main() -> orbimap::Result<()> {
    let grid: Grid = "n=1..3,L=0..1,N=0..1".parse()?;
    let opts = VerifyOptions {
        samples: 100,
        ..Default::default()
    };
    let reports = verify_grid(&grid, &opts);
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{failed} of {} tuples failed", reports.len());
    Ok(())
}
