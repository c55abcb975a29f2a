//! Fourier transforms on `K` and on `K^ x C_m`.
//!
//! Sums run in ascending index order so results do not depend on threading.

use num_complex::Complex64;

use crate::error::Result;
use crate::heisenberg::GwhGroup;
use crate::repr::state::{Space, StateVector};

/// `f^(w) = sum_k w_K f(k) conj(w(k))`.
pub fn fourier_k(group: &GwhGroup, f: &StateVector) -> Result<StateVector> {
    f.expect_space(Space::Group)?;
    let kg = group.k_group();
    let n = kg.size();
    let values = (0..n)
        .map(|a| {
            let s: Complex64 = (0..n).map(|k| f.values()[k] * kg.char_value(a, k).conj()).sum();
            s * f.weight()
        })
        .collect();
    StateVector::new(group, Space::Dual, values)
}

/// `f(k) = sum_w w_Kdual f^(w) w(k)`.
pub fn inverse_fourier_k(group: &GwhGroup, fhat: &StateVector) -> Result<StateVector> {
    fhat.expect_space(Space::Dual)?;
    let kg = group.k_group();
    let n = kg.size();
    let values = (0..n)
        .map(|k| {
            let s: Complex64 = (0..n).map(|a| fhat.values()[a] * kg.char_value(a, k)).sum();
            s * fhat.weight()
        })
        .collect();
    StateVector::new(group, Space::Group, values)
}

/// `conj(xi(k')) conj(t^n')` as a phase exponent mod `m`, with `t = exp(2 pi i ti / m)`.
#[inline]
fn grid_phase(group: &GwhGroup, xi: usize, ti: usize, kp: usize, np: usize) -> usize {
    let m = group.torus_order();
    let e = (group.char_phase(xi, kp) + ti * np) % m;
    (m - e) % m
}

/// `f^(k', n') = sum_{xi, t} w_Kdual w_T f(xi, t) conj(xi(k')) conj(t^n')`.
pub fn fourier_quasi(group: &GwhGroup, f: &StateVector) -> Result<StateVector> {
    f.expect_space(Space::Quasi)?;
    let n = group.k_size();
    let m = group.torus_order();
    let roots = group.roots();
    let mut values = Vec::with_capacity(n * m);
    for kp in 0..n {
        for np in 0..m {
            let mut s = Complex64::new(0.0, 0.0);
            for xi in 0..n {
                for ti in 0..m {
                    s += f.values()[xi * m + ti] * roots.get(grid_phase(group, xi, ti, kp, np));
                }
            }
            values.push(s * f.weight());
        }
    }
    StateVector::new(group, Space::DualGrid, values)
}

/// Inverse of [`fourier_quasi`]: `f(xi, t) = sum_{k', n'} w_K f^(k', n') xi(k') t^n'`.
pub fn inverse_fourier_quasi(group: &GwhGroup, fhat: &StateVector) -> Result<StateVector> {
    fhat.expect_space(Space::DualGrid)?;
    let n = group.k_size();
    let m = group.torus_order();
    let roots = group.roots();
    let mut values = Vec::with_capacity(n * m);
    for xi in 0..n {
        for ti in 0..m {
            let mut s = Complex64::new(0.0, 0.0);
            for kp in 0..n {
                for np in 0..m {
                    s += fhat.values()[kp * m + np] * roots.get(grid_phase(group, xi, ti, kp, np)).conj();
                }
            }
            values.push(s * fhat.weight());
        }
    }
    StateVector::new(group, Space::Quasi, values)
}
