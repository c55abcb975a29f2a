//! Admissibility of windows for the quasi-regular representation.
//!
//! For `(h, k)` in `H x_tau K` let `Psi_{(h,k)} = (psi o theta_{(h,k)^-1})^`
//! (compose first, then transform). The Calderon function
//! `C(k', n') = sum_{(h,k)} w_H w_K |Psi_{(h,k)}(k', n')|^2` governs the energy
//! of the transform: `||W_psi f||^2 = sum_{k', n'} w_K |f^(k', n')|^2 C(k', n')`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::heisenberg::{GwhGroup, SemidirectElement};
use crate::repr::{fourier_quasi, Rep, Space, StateVector};
use crate::wavelet::coefficients::wavelet_constant;
use crate::wavelet::cwt::cwt_energy;

/// `psi o theta_{x^-1}` on `K^ x C_m`.
pub fn transport_window(group: &GwhGroup, psi: &StateVector, x: SemidirectElement) -> Result<StateVector> {
    psi.expect_space(Space::Quasi)?;
    let m = group.torus_order();
    let xinv = group.sd_inv(x);
    let values = (0..group.k_size())
        .flat_map(|xi| (0..m).map(move |t| (xi, t)))
        .map(|(xi, t)| {
            let (a, z) = group.theta_apply(xinv, xi, t);
            psi.values()[a * m + z]
        })
        .collect();
    StateVector::new(group, Space::Quasi, values)
}

/// `Psi_x = (psi o theta_{x^-1})^` on `K x Z_m`.
pub fn transported_transform(group: &GwhGroup, psi: &StateVector, x: SemidirectElement) -> Result<StateVector> {
    fourier_quasi(group, &transport_window(group, psi, x)?)
}

/// `Psi_{(h,k)}` for every `(h, k)`, indexed by `h * |K| + k`.
pub fn transported_transforms(group: &GwhGroup, psi: &StateVector) -> Result<Vec<StateVector>> {
    let n = group.k_size();
    (0..group.h_order() * n)
        .map(|i| transported_transform(group, psi, SemidirectElement { h: i / n, k: i % n }))
        .collect()
}

/// `C(k', n')` indexed by `k' * m + n'`.
pub fn calderon_values(group: &GwhGroup, psi: &StateVector) -> Result<Vec<f64>> {
    let transported = transported_transforms(group, psi)?;
    let w = group.weights().w_h * group.weights().w_k;
    let mut c = vec![0.0; Space::DualGrid.dim(group)];
    for t in &transported {
        for (acc, v) in c.iter_mut().zip(t.values()) {
            *acc += w * v.norm_sqr();
        }
    }
    Ok(c)
}

/// Largest deviation between `Psi_{(h,k)}(k', n')` and
/// `psi^(tau_{h^-1}(k' + n' k), n')`, the transform of the untransported
/// window read off along the induced action on `K x Z_m`.
pub fn theta_transport_residual(group: &GwhGroup, psi: &StateVector) -> Result<f64> {
    let kg = group.k_group();
    let n = kg.size();
    let m = group.torus_order();
    let psi_hat = fourier_quasi(group, psi)?;
    let mut worst = 0.0f64;
    for h in 0..group.h_order() {
        let hinv = group.acting().inv(h);
        for k in 0..n {
            let t = transported_transform(group, psi, SemidirectElement { h, k })?;
            for kp in 0..n {
                for np in 0..m {
                    let moved = group.action().tau(hinv, kg.add(kp, kg.scale(k, np)));
                    let d = (t.values()[kp * m + np] - psi_hat.values()[moved * m + np]).norm();
                    worst = worst.max(d);
                }
            }
        }
    }
    Ok(worst)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalderonReport {
    /// Wavelet constant of the window for the quasi-regular representation.
    pub c_psi: f64,
    /// `C(k', n')` indexed by `k' * m + n'`.
    pub calderon: Vec<f64>,
    pub min: f64,
    pub max: f64,
    pub spread: f64,
    pub is_constant: bool,
    /// Worst relative residual of the energy identity over the probe signals.
    pub energy_residual: Option<f64>,
    pub probes: usize,
    pub theta_transport_residual: f64,
}

/// Computes the Calderon function of `psi`, its spread, the wavelet constant,
/// and checks the energy identity on each probe signal.
pub fn calderon_function(
    group: &GwhGroup,
    psi: &StateVector,
    probes: &[StateVector],
    tol: f64,
) -> Result<CalderonReport> {
    let calderon = calderon_values(group, psi)?;
    let min = calderon.iter().copied().fold(f64::INFINITY, f64::min);
    let max = calderon.iter().copied().fold(0.0, f64::max);
    let spread = max - min;
    let c_psi = if psi.norm_sqr() == 0.0 { 0.0 } else { wavelet_constant(group, Rep::Rho, psi)? };
    let mut energy_residual = None;
    for f in probes {
        let r = energy_identity_residual(group, psi, f, &calderon)?;
        energy_residual = Some(energy_residual.map_or(r, |e: f64| e.max(r)));
    }
    Ok(CalderonReport {
        c_psi,
        is_constant: spread <= tol * max.max(1.0),
        calderon,
        min,
        max,
        spread,
        energy_residual,
        probes: probes.len(),
        theta_transport_residual: theta_transport_residual(group, psi)?,
    })
}

/// `| ||W_psi f||^2 - sum w_K |f^|^2 C |`, relative to `||W_psi f||^2` when
/// that is nonzero.
pub fn energy_identity_residual(group: &GwhGroup, psi: &StateVector, f: &StateVector, calderon: &[f64]) -> Result<f64> {
    let direct = cwt_energy(group, Rep::Rho, psi, f)?;
    let fhat = fourier_quasi(group, f)?;
    let predicted: f64 =
        fhat.weight() * fhat.values().iter().zip(calderon).map(|(v, c)| v.norm_sqr() * c).sum::<f64>();
    let diff = (direct - predicted).abs();
    Ok(if direct > 0.0 { diff / direct } else { diff })
}
