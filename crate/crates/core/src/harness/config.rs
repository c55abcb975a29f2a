use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{automorphism_from_matrix, make_abelian_group, Action, AutomorphismTable, MeasureWeights};
use crate::heisenberg::GwhGroup;

/// Largest acting group a config may generate.
pub const H_CAP: usize = 64;
/// Largest `|H| |K|^2 m` a config may describe.
pub const POINT_CAP: usize = 100_000;

/// How the acting group `H` is specified.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum HSpec {
    Trivial,
    /// Units `u`, each acting on every factor by `k -> u k`.
    UnitsSubgroup { generators: Vec<i64> },
    /// Integer matrices acting on residue vectors.
    MatrixGenerators { generators: Vec<Vec<Vec<i64>>> },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Normalization {
    #[serde(rename = "mu_H_total", default = "one")]
    pub mu_h_total: f64,
}

impl Default for Normalization {
    fn default() -> Self {
        Self { mu_h_total: 1.0 }
    }
}

fn one() -> f64 {
    1.0
}

fn default_tolerance() -> f64 {
    1e-9
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub orders: Vec<i64>,
    pub h_spec: HSpec,
    /// Defaults to `exponent(K)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_order: Option<usize>,
    #[serde(default)]
    pub normalization: Normalization,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub seed: u64,
}

fn field_err(field: &str, e: impl std::fmt::Display) -> Error {
    Error::Config { field: field.into(), message: e.to_string() }
}

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Config = serde_json::from_str(text)?;
        cfg.build()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// sha256 of the compact JSON form.
    pub fn hash(&self) -> String {
        let text = serde_json::to_string(self).expect("config serializes");
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn with_h_mass(mut self, total: f64) -> Self {
        self.normalization.mu_h_total = total;
        self
    }

    /// The action of `H` on `K`, closed under composition.
    pub fn build_action(&self) -> Result<Action> {
        let k = make_abelian_group(&self.orders).map_err(|e| field_err("orders", e))?;
        let generators: Vec<AutomorphismTable> = match &self.h_spec {
            HSpec::Trivial => return Ok(Action::trivial(k)),
            HSpec::UnitsSubgroup { generators } => generators
                .iter()
                .map(|&u| {
                    let r = k.rank();
                    let matrix: Vec<Vec<i64>> =
                        (0..r).map(|i| (0..r).map(|j| if i == j { u } else { 0 }).collect()).collect();
                    automorphism_from_matrix(&k, &matrix)
                        .map_err(|_| field_err("h_spec.generators", format!("{u} is not a unit modulo every order")))
                })
                .collect::<Result<_>>()?,
            HSpec::MatrixGenerators { generators } => generators
                .iter()
                .map(|m| automorphism_from_matrix(&k, m).map_err(|e| field_err("h_spec.generators", e)))
                .collect::<Result<_>>()?,
        };
        Action::generated(k, &generators, H_CAP).map_err(|e| field_err("h_spec", e))
    }

    /// Validates the config and builds the group it describes.
    pub fn build(&self) -> Result<GwhGroup> {
        self.build_with(self.build_action()?)
    }

    /// Builds a group on a supplied action with this config's torus and measure.
    pub fn build_with(&self, action: Action) -> Result<GwhGroup> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(field_err("tolerance", "must be positive and finite"));
        }
        let mass = self.normalization.mu_h_total;
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(field_err("normalization.mu_H_total", "must be positive and finite"));
        }
        let exponent = action.group().exponent();
        let m = self.torus_order.unwrap_or(exponent);
        let h = action.acting().order();
        let n = action.group().size();
        let points = h.saturating_mul(n).saturating_mul(n).saturating_mul(m);
        if m > 0 && m.is_multiple_of(exponent) && points > POINT_CAP {
            return Err(Error::ResourceCap { points, cap: POINT_CAP });
        }
        let weights = MeasureWeights::normalized(h, n, m.max(1)).with_h_mass(h, mass);
        GwhGroup::new(action, m, weights).map_err(|e| field_err("torus_order", e))
    }
}

/// Reads, parses and validates a config file.
pub fn load_config(path: impl AsRef<Path>) -> Result<Config> {
    Config::from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_takes_defaults() {
        let cfg = Config::from_json(r#"{"orders":[4],"h_spec":{"kind":"trivial"}}"#).unwrap();
        let g = cfg.build().unwrap();
        assert_eq!(g.torus_order(), 4);
        assert_eq!(cfg.tolerance, 1e-9);
        assert_eq!(g.h_mass(), 1.0);
    }

    #[test]
    fn divisibility_error_names_field() {
        let err = Config::from_json(r#"{"orders":[4],"h_spec":{"kind":"trivial"},"torus_order":3}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("torus_order"), "{msg}");
        assert!(msg.contains("exponent 4 does not divide 3"), "{msg}");
    }

    #[test]
    fn rotation_generates_order_four() {
        let cfg = Config::from_json(
            r#"{"orders":[5,5],"h_spec":{"kind":"matrix_generators","generators":[[[0,-1],[1,0]]]}}"#,
        )
        .unwrap();
        assert_eq!(cfg.build().unwrap().h_order(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Config::from_json(r#"{"orders":[4],"h_spec":{"kind":"units_subgroup","generators":[2]}}"#).is_err());
        assert!(Config::from_json(r#"{"orders":[4],"h_spec":{"kind":"trivial"},"extra":1}"#).is_err());
        assert!(Config::from_json(r#"{"orders":[0],"h_spec":{"kind":"trivial"}}"#).is_err());
        let big = Config::from_json(r#"{"orders":[64],"h_spec":{"kind":"trivial"}}"#).unwrap_err();
        assert!(big.to_string().contains("reduce orders or torus_order"));
    }

    #[test]
    fn hash_is_stable_and_sensitive() {
        let a = Config::from_json(r#"{"orders":[4],"h_spec":{"kind":"trivial"},"seed":1}"#).unwrap();
        let b = Config::from_json(r#"{"seed":1,"h_spec":{"kind":"trivial"},"orders":[4]}"#).unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_ne!(a.hash(), a.clone().with_h_mass(2.0).hash());
    }
}
