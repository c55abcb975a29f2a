//! Transform a signal with each representation and invert.

use gwh::harness::{preset, random_state};
use gwh::repr::Rep;
use gwh::wavelet::{cwt, gaussian_window, reconstruct, wavelet_constant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gwh::Result<()> {
    let g = preset("finite-heisenberg")?.build()?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for rep in Rep::ALL {
        let psi = gaussian_window(&g, rep.space());
        let f = random_state(&g, rep.space(), &mut rng);
        let table = cwt(&g, rep, &psi, &f)?;
        let back = reconstruct(&g, rep, &psi, &table)?;
        println!(
            "{rep:<8} c_psi = {:.6}  |Wf|^2 = {:.6}  |f|^2 = {:.6}  rel. error = {:.2e}",
            wavelet_constant(&g, rep, &psi)?,
            table.energy(),
            f.norm_sqr(),
            back.distance(&f) / f.norm()
        );
    }
    Ok(())
}
