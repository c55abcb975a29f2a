//! Matrix coefficients, the orthogonality relation, continuous wavelet
//! transforms and their inversion, and admissibility of windows.

pub mod calderon;
pub mod coefficients;
pub mod cwt;
pub mod windows;

pub use calderon::{
    calderon_function, calderon_values, energy_identity_residual, theta_transport_residual, transport_window,
    transported_transform, transported_transforms, CalderonReport,
};
pub use coefficients::{coefficient_table, matrix_coefficient, orthogonality_sum, wavelet_constant};
pub use cwt::{cwt, cwt_energy, cwt_rho_fourier, cwt_rho_fourier_table, reconstruct, CwtTable};
pub use windows::gaussian_window;
