use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::heisenberg::{GwhElement, GwhGroup};
use crate::repr::{rep_apply, rep_monomial, Rep, StateVector};

/// `<phi, rep(g) psi>` in the weighted inner product of the rep's space.
pub fn matrix_coefficient(
    group: &GwhGroup,
    rep: Rep,
    phi: &StateVector,
    g: &GwhElement,
    psi: &StateVector,
) -> Result<Complex64> {
    phi.expect_space(rep.space())?;
    let moved = rep_apply(group, rep, g, psi)?;
    phi.inner(&moved)
}

/// `<phi, rep(g) psi>` for every group element, in lexicographic order.
///
/// Elements are evaluated in parallel; the output order is fixed.
pub fn coefficient_table(group: &GwhGroup, rep: Rep, phi: &StateVector, psi: &StateVector) -> Result<Vec<Complex64>> {
    phi.expect_space(rep.space())?;
    psi.expect_space(rep.space())?;
    let dim = rep.space().dim(group);
    for v in [phi, psi] {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
        }
    }
    let w = phi.weight();
    let phi_v = phi.values();
    let psi_v = psi.values();
    Ok((0..group.size())
        .into_par_iter()
        .map(|i| {
            let g = group.element(i);
            let mono = rep_monomial(group, rep, &g);
            let s: Complex64 = mono
                .source
                .iter()
                .zip(&mono.phase)
                .zip(phi_v)
                .map(|((&src, p), x)| x * (p * psi_v[src]).conj())
                .sum();
            s * w
        })
        .collect())
}

/// `sum_g w(g) |<phi, pi(g) psi>|^2`, which equals `||phi||^2 ||psi||^2 mu_H(H)`.
pub fn orthogonality_sum(group: &GwhGroup, phi: &StateVector, psi: &StateVector) -> Result<f64> {
    let table = coefficient_table(group, Rep::Pi, phi, psi)?;
    Ok(weighted_energy(group, &table))
}

pub(crate) fn weighted_energy(group: &GwhGroup, values: &[Complex64]) -> f64 {
    group.point_weight() * values.iter().map(|v| v.norm_sqr()).sum::<f64>()
}

/// `c_psi = sum_g w(g) |<psi, rep(g) psi>|^2`.
pub fn wavelet_constant(group: &GwhGroup, rep: Rep, psi: &StateVector) -> Result<f64> {
    if psi.values().iter().all(|v| *v == Complex64::new(0.0, 0.0)) {
        return Err(Error::ZeroWindow);
    }
    let table = coefficient_table(group, rep, psi, psi)?;
    Ok(weighted_energy(group, &table))
}
