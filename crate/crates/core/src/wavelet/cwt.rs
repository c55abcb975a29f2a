use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::{GwhElement, GwhGroup};
use crate::repr::{fourier_quasi, inverse_fourier_quasi, rep_monomial, Rep, Space, StateVector};
use crate::wavelet::calderon::{calderon_values, transported_transforms};
use crate::wavelet::coefficients::{coefficient_table, wavelet_constant, weighted_energy};

/// Relative size below which a window counts as inadmissible.
const ADMISSIBILITY_FLOOR: f64 = 1e-12;

/// `W_psi f` over the whole group, indexed lexicographically in `(h, k, a, z)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CwtTable {
    pub rep: Rep,
    /// `[|H|, |K|, |K^|, m]`
    pub shape: [usize; 4],
    pub point_weight: f64,
    pub values: Vec<Complex64>,
}

impl CwtTable {
    fn new(group: &GwhGroup, rep: Rep, values: Vec<Complex64>) -> Self {
        Self {
            rep,
            shape: [group.h_order(), group.k_size(), group.k_size(), group.torus_order()],
            point_weight: group.point_weight(),
            values,
        }
    }

    pub fn get(&self, group: &GwhGroup, g: &GwhElement) -> Complex64 {
        self.values[group.index_of(g)]
    }

    /// `||W_psi f||^2` with respect to the Haar weights.
    pub fn energy(&self) -> f64 {
        self.point_weight * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    /// Rows `(h, k, a, zidx, re, im)`.
    pub fn rows(&self) -> impl Iterator<Item = ([usize; 4], Complex64)> + '_ {
        let [_, n, _, m] = self.shape;
        self.values.iter().enumerate().map(move |(i, v)| {
            let z = i % m;
            let a = (i / m) % n;
            let k = (i / (m * n)) % n;
            let h = i / (m * n * n);
            ([h, k, a, z], *v)
        })
    }
}

/// `W_psi f(g) = <f, rep(g) psi>` for all `g`.
pub fn cwt(group: &GwhGroup, rep: Rep, psi: &StateVector, f: &StateVector) -> Result<CwtTable> {
    let values = coefficient_table(group, rep, f, psi)?;
    Ok(CwtTable::new(group, rep, values))
}

/// `sum_g w(g) W(g) rep(g) psi`, the frame operator applied through the table.
fn synthesize(group: &GwhGroup, rep: Rep, psi: &StateVector, table: &CwtTable) -> Result<StateVector> {
    psi.expect_space(rep.space())?;
    if table.values.len() != group.size() {
        return Err(Error::DimensionMismatch { expected: group.size(), got: table.values.len() });
    }
    let mut acc = vec![Complex64::new(0.0, 0.0); psi.dim()];
    for (i, w) in table.values.iter().enumerate() {
        let moved = rep_monomial(group, rep, &group.element(i)).apply(psi.values());
        for (a, v) in acc.iter_mut().zip(moved) {
            *a += w * v;
        }
    }
    let scale = group.point_weight();
    StateVector::new(group, rep.space(), acc.into_iter().map(|v| v * scale).collect())
}

/// Inverts [`cwt`].
///
/// For the irreducible `pi` and `pi~` the frame operator is the scalar
/// `c_psi / ||psi||^2`. For `rho` it is the Fourier multiplier given by the
/// Calderon function, which is divided out on `K x Z_m`.
pub fn reconstruct(group: &GwhGroup, rep: Rep, psi: &StateVector, table: &CwtTable) -> Result<StateVector> {
    let frame = synthesize(group, rep, psi, table)?;
    match rep {
        Rep::Pi | Rep::PiTilde => {
            let c = wavelet_constant(group, rep, psi)?;
            let norm2 = psi.norm_sqr();
            if c <= ADMISSIBILITY_FLOOR * norm2 * norm2 {
                return Err(Error::InadmissibleWindow(c));
            }
            Ok(frame.scaled(Complex64::new(norm2 / c, 0.0)))
        }
        Rep::Rho => {
            let calderon = calderon_values(group, psi)?;
            let cmax = calderon.iter().copied().fold(0.0, f64::max);
            let cmin = calderon.iter().copied().fold(f64::INFINITY, f64::min);
            if cmax == 0.0 || cmin <= ADMISSIBILITY_FLOOR * cmax {
                return Err(Error::InadmissibleWindow(cmin));
            }
            let fhat = fourier_quasi(group, &frame)?;
            let divided = fhat.values().iter().zip(&calderon).map(|(v, c)| v / c).collect();
            inverse_fourier_quasi(group, &StateVector::new(group, Space::DualGrid, divided)?)
        }
    }
}

/// `W_psi f(g)` for `rho` evaluated on the Fourier side:
/// `delta(h)^{-1/2} sum_{k', n'} w_K f^(k', n') z^n' w(k') conj(Psi_{(h,k)}(k', n'))`
/// with `Psi_{(h,k)} = (psi o theta_{(h,k)^-1})^`.
pub fn cwt_rho_fourier(group: &GwhGroup, psi: &StateVector, f: &StateVector, g: &GwhElement) -> Result<Complex64> {
    group.check(g)?;
    f.expect_space(Space::Quasi)?;
    let fhat = fourier_quasi(group, f)?;
    let transported = crate::wavelet::calderon::transported_transform(group, psi, g.semidirect())?;
    Ok(fourier_side_value(group, &fhat, &transported, g))
}

fn fourier_side_value(group: &GwhGroup, fhat: &StateVector, psi_t: &StateVector, g: &GwhElement) -> Complex64 {
    let n = group.k_size();
    let m = group.torus_order();
    let roots = group.roots();
    let mut s = Complex64::new(0.0, 0.0);
    for kp in 0..n {
        let wk = group.char_phase(g.a, kp);
        for np in 0..m {
            let i = kp * m + np;
            let phase = roots.get(wk + g.z * np);
            s += fhat.values()[i] * phase * psi_t.values()[i].conj();
        }
    }
    s * fhat.weight() * group.action().delta(g.h).powf(-0.5)
}

/// [`cwt_rho_fourier`] over every group element.
pub fn cwt_rho_fourier_table(group: &GwhGroup, psi: &StateVector, f: &StateVector) -> Result<CwtTable> {
    f.expect_space(Space::Quasi)?;
    let fhat = fourier_quasi(group, f)?;
    let transported = transported_transforms(group, psi)?;
    let values = group
        .elements()
        .map(|g| fourier_side_value(group, &fhat, &transported[g.h * group.k_size() + g.k], &g))
        .collect();
    Ok(CwtTable::new(group, Rep::Rho, values))
}

/// `||W_psi f||^2` computed directly from the coefficient table.
pub fn cwt_energy(group: &GwhGroup, rep: Rep, psi: &StateVector, f: &StateVector) -> Result<f64> {
    let values = coefficient_table(group, rep, f, psi)?;
    Ok(weighted_energy(group, &values))
}
