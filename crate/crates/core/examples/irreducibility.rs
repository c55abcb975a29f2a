//! Commutant dimensions: pi is irreducible, pi (+) pi is not, and the
//! quasi-regular rho splits.

use gwh::harness::preset;
use gwh::repr::{commutant_dimension, monomial_commutant_dimension, rep_monomial, Rep, COMMUTANT_CAP};

fn main() -> gwh::Result<()> {
    for name in ["finite-wh", "units-dilation", "finite-e2"] {
        let g = preset(name)?.build()?;
        let pi = commutant_dimension(&g, Rep::Pi, COMMUTANT_CAP)?;
        let gens: Vec<_> = g.generators().iter().map(|x| rep_monomial(&g, Rep::Pi, x)).collect();
        let doubled: Vec<_> = gens.iter().map(|m| m.direct_sum(m)).collect();
        let rho: Vec<_> = g.generators().iter().map(|x| rep_monomial(&g, Rep::Rho, x)).collect();
        println!(
            "{name:<16} pi: {pi}  pi+pi: {}  rho: {}",
            monomial_commutant_dimension(&doubled)?,
            monomial_commutant_dimension(&rho)?
        );
    }
    Ok(())
}
