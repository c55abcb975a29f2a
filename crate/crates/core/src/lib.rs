pub mod error;
pub mod group;
pub mod harness;
pub mod heisenberg;
pub mod repr;
pub mod wavelet;

pub use error::{Error, Result};
