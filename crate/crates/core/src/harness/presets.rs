use crate::error::{Error, Result};
use crate::harness::config::{Config, HSpec, Normalization};

pub const PRESET_NAMES: [&str; 4] = ["finite-wh", "finite-e2", "finite-heisenberg", "units-dilation"];

/// Built-in configurations.
///
/// - `finite-wh`: trivial `H`, `K = Z_8`, `m = 8`
/// - `finite-e2`: quarter-turn rotations on `Z_5 x Z_5`, `m = 5`
/// - `finite-heisenberg`: trivial `H`, `K = Z_4 x Z_4`, `m = 4`
/// - `units-dilation`: `(Z_5)^x` acting by multiplication on `Z_5`, `m = 5`
pub fn preset(name: &str) -> Result<Config> {
    let (orders, h_spec, m) = match name {
        "finite-wh" => (vec![8], HSpec::Trivial, 8),
        "finite-e2" => (vec![5, 5], HSpec::MatrixGenerators { generators: vec![vec![vec![0, -1], vec![1, 0]]] }, 5),
        "finite-heisenberg" => (vec![4, 4], HSpec::Trivial, 4),
        "units-dilation" => (vec![5], HSpec::UnitsSubgroup { generators: vec![2] }, 5),
        _ => return Err(Error::UnknownPreset(name.into())),
    };
    Ok(Config {
        name: Some(name.into()),
        orders,
        h_spec,
        torus_order: Some(m),
        normalization: Normalization::default(),
        tolerance: 1e-9,
        seed: 2024,
    })
}

pub fn all_presets() -> Vec<Config> {
    PRESET_NAMES.iter().map(|n| preset(n).expect("built-in preset")).collect()
}
