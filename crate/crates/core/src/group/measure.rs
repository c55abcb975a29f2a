use serde::{Deserialize, Serialize};

/// Per-point Haar weights on `H`, `K`, the character group and `C_m`.
///
/// The defaults `w_H = 1/|H|`, `w_K = 1/|K|`, `w_Kdual = 1`, `w_T = 1/m`
/// make the Fourier transform on `K` unitary and give `mu_H(H) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureWeights {
    pub w_h: f64,
    pub w_k: f64,
    pub w_kdual: f64,
    pub w_t: f64,
}

impl MeasureWeights {
    pub fn normalized(h_order: usize, k_size: usize, m: usize) -> Self {
        Self {
            w_h: 1.0 / h_order as f64,
            w_k: 1.0 / k_size as f64,
            w_kdual: 1.0,
            w_t: 1.0 / m as f64,
        }
    }

    /// Rescales `w_H` so that `mu_H(H) = total`.
    pub fn with_h_mass(self, h_order: usize, total: f64) -> Self {
        Self { w_h: total / h_order as f64, ..self }
    }

    pub fn h_mass(&self, h_order: usize) -> f64 {
        self.w_h * h_order as f64
    }
}
