//! Calderon function of a Gaussian window for rho, and the Fourier-side
//! formula for the transform.

use gwh::harness::{all_presets, random_state};
use gwh::repr::{Rep, Space};
use gwh::wavelet::{calderon_function, cwt, cwt_rho_fourier_table, gaussian_window};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gwh::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for cfg in all_presets() {
        let g = cfg.build()?;
        let psi = gaussian_window(&g, Space::Quasi);
        let probes: Vec<_> = (0..3).map(|_| random_state(&g, Space::Quasi, &mut rng)).collect();
        let r = calderon_function(&g, &psi, &probes, cfg.tolerance)?;
        let f = &probes[0];
        let direct = cwt(&g, Rep::Rho, &psi, f)?;
        let fourier = cwt_rho_fourier_table(&g, &psi, f)?;
        let dev = direct.values.iter().zip(&fourier.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        println!(
            "{:<18} C in [{:.4}, {:.4}]  spread {:.4}  energy residual {:.1e}  fourier side {:.1e}",
            cfg.name.unwrap_or_default(),
            r.min,
            r.max,
            r.spread,
            r.energy_residual.unwrap_or(0.0),
            dev
        );
    }
    Ok(())
}
