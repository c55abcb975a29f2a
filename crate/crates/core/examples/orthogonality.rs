//! Orthogonality relation for pi on the finite E(2) preset, with the
//! normalized Haar measure on H and with total mass |H|.

use gwh::harness::{preset, random_state};
use gwh::repr::Space;
use gwh::wavelet::orthogonality_sum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gwh::Result<()> {
    let g = preset("finite-e2")?.build()?;
    let scaled = preset("finite-e2")?.with_h_mass(4.0).build()?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..3 {
        let phi = random_state(&g, Space::Dual, &mut rng);
        let psi = random_state(&g, Space::Dual, &mut rng);
        let norms = phi.norm_sqr() * psi.norm_sqr();
        let s = orthogonality_sum(&g, &phi, &psi)?;
        let s4 = orthogonality_sum(&scaled, &phi, &psi)?;
        println!("|phi|^2|psi|^2 = {norms:.12}  sum = {s:.12}  sum(mu_H = 4) / norms = {:.12}", s4 / norms);
    }
    Ok(())
}
