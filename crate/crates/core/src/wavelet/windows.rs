use num_complex::Complex64;

use crate::heisenberg::GwhGroup;
use crate::repr::{Space, StateVector};

/// A unit-norm window that decays like a Gaussian in the circular distance
/// from the origin of each cyclic factor (and of `C_m`, on the quasi space).
pub fn gaussian_window(group: &GwhGroup, space: Space) -> StateVector {
    let kg = group.k_group();
    let m = group.torus_order();
    let profile = |k: usize| -> f64 {
        kg.residues_of(k)
            .iter()
            .zip(kg.orders())
            .map(|(&r, &n)| {
                let d = r.min(n - r) as f64;
                let sigma = (n as f64 / 4.0).max(0.5);
                (d / sigma).powi(2)
            })
            .sum()
    };
    let circle = |t: usize| -> f64 {
        let d = t.min(m - t) as f64;
        (d / (m as f64 / 4.0).max(0.5)).powi(2)
    };
    let values: Vec<Complex64> = match space {
        Space::Dual | Space::Group => (0..kg.size()).map(|k| Complex64::new((-0.5 * profile(k)).exp(), 0.0)).collect(),
        Space::Quasi | Space::DualGrid => (0..kg.size())
            .flat_map(|k| (0..m).map(move |t| (k, t)))
            .map(|(k, t)| Complex64::new((-0.5 * (profile(k) + circle(t))).exp(), 0.0))
            .collect(),
    };
    StateVector::new(group, space, values).expect("window dimension").normalized()
}
