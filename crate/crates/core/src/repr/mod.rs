//! Unitary representations of the generalized Weyl-Heisenberg group, the
//! Fourier operators relating them, and the commutant solver.

pub mod commutant;
pub mod fourier;
pub mod intertwiner;
pub mod monomial;
pub mod ops;
pub mod state;

use nalgebra::DMatrix;
use num_complex::Complex64;

pub use commutant::{
    commutant_dimension, commutant_of, direct_sum, generator_matrices, monomial_commutant_dimension, CommutantReport,
    COMMUTANT_CAP,
};
pub use fourier::{fourier_k, fourier_quasi, inverse_fourier_k, inverse_fourier_quasi};
pub use intertwiner::{intertwiner_check, FourierDirection, IntertwinerReport};
pub use monomial::Monomial;
pub use ops::{
    pi_apply, pi_matrix, pi_tilde_apply, rep_apply, rep_matrix, rep_monomial, rho_apply, Rep, MATRIX_CAP,
};
pub use state::{Space, StateVector};

/// `max_ij |m_ij|`.
pub fn max_modulus(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// A materialized representation operator on one of the [`Space`]s.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryOperator {
    space: Space,
    matrix: DMatrix<Complex64>,
}

impl UnitaryOperator {
    pub fn new(space: Space, matrix: DMatrix<Complex64>) -> Self {
        Self { space, matrix }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// `max |(U^* U - I)_{ij}|`.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.matrix.nrows();
        max_modulus(&(self.matrix.adjoint() * &self.matrix - DMatrix::identity(n, n)))
    }
}
