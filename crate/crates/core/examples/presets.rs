//! Builds each preset and prints its sizes.

use gwh::harness::all_presets;

fn main() -> gwh::Result<()> {
    for cfg in all_presets() {
        let g = cfg.build()?;
        println!(
            "{:<18} |H| = {:<2} |K| = {:<3} m = {}  |G| = {}",
            cfg.name.as_deref().unwrap_or("-"),
            g.h_order(),
            g.k_size(),
            g.torus_order(),
            g.size()
        );
    }
    Ok(())
}
