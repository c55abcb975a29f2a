//! Quick verification run on one preset, printed as a table.

use gwh::harness::{preset, run_verify, Samples, VerifyOptions};

fn main() -> gwh::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "units-dilation".into());
    let opts = VerifyOptions { samples: Samples::quick(), ..VerifyOptions::default() };
    let report = run_verify(&preset(&name)?, &opts)?;
    for c in &report.checks {
        println!("{:<32} {:<12} {:?}", c.name, format!("{:?}", c.status), c.max_residual);
    }
    println!("{:?}", report.summary.status);
    Ok(())
}
