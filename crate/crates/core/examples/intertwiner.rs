//! Which Fourier operator carries pi~ onto pi.

use gwh::harness::all_presets;
use gwh::repr::{intertwiner_check, MATRIX_CAP};

fn main() -> gwh::Result<()> {
    for cfg in all_presets() {
        let r = intertwiner_check(&cfg.build()?, MATRIX_CAP)?;
        println!(
            "{:<18} {:?}  forward {:.2e}  adjoint {:.2e}",
            cfg.name.unwrap_or_default(),
            r.direction_used,
            r.forward_deviation,
            r.adjoint_deviation
        );
    }
    Ok(())
}
