use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::GwhGroup;

/// The four function spaces the representations and transforms act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    /// `L^2(K^)`, indexed by character label.
    Dual,
    /// `L^2(K)`, indexed by element.
    Group,
    /// `L^2(K^ x C_m)`, index `xi * m + t`.
    Quasi,
    /// Coefficients on `K x Z_m`, index `k * m + n`.
    DualGrid,
}

impl Space {
    pub fn dim(self, group: &GwhGroup) -> usize {
        match self {
            Space::Dual | Space::Group => group.k_size(),
            Space::Quasi | Space::DualGrid => group.k_size() * group.torus_order(),
        }
    }

    pub fn weight(self, group: &GwhGroup) -> f64 {
        let w = group.weights();
        match self {
            Space::Dual => w.w_kdual,
            Space::Group => w.w_k,
            Space::Quasi => w.w_kdual * w.w_t,
            Space::DualGrid => w.w_k,
        }
    }

    pub fn index_scheme(self) -> &'static str {
        match self {
            Space::Dual => "character label a, lexicographic over residues",
            Space::Group => "element k, lexicographic over residues",
            Space::Quasi => "a * m + t for character a and phase exponent t",
            Space::DualGrid => "k * m + n for element k and frequency n in Z_m",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Space::Dual => "L2(K^)",
            Space::Group => "L2(K)",
            Space::Quasi => "L2(K^ x C_m)",
            Space::DualGrid => "l2(K x Z_m)",
        };
        f.write_str(s)
    }
}

/// A complex function on one of the [`Space`]s together with its point weight.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    space: Space,
    values: Vec<Complex64>,
    weight: f64,
}

impl StateVector {
    pub fn new(group: &GwhGroup, space: Space, values: Vec<Complex64>) -> Result<Self> {
        let dim = space.dim(group);
        if values.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: values.len() });
        }
        Ok(Self { space, values, weight: space.weight(group) })
    }

    pub fn zeros(group: &GwhGroup, space: Space) -> Self {
        Self { space, values: vec![Complex64::new(0.0, 0.0); space.dim(group)], weight: space.weight(group) }
    }

    /// The indicator of a single index.
    pub fn delta(group: &GwhGroup, space: Space, index: usize) -> Result<Self> {
        let mut v = Self::zeros(group, space);
        let dim = v.values.len();
        *v.values.get_mut(index).ok_or(Error::IndexOutOfRange { index, size: dim })? = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub(crate) fn from_parts(space: Space, values: Vec<Complex64>, weight: f64) -> Self {
        Self { space, values, weight }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn expect_space(&self, space: Space) -> Result<()> {
        if self.space != space {
            return Err(Error::SpaceMismatch { expected: space.to_string(), got: self.space.to_string() });
        }
        Ok(())
    }

    /// Weighted inner product, linear in the first argument.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.expect_space(other.space)?;
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: other.dim() });
        }
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &StateVector) -> Complex64 {
        let s: Complex64 = self.values.iter().zip(&other.values).map(|(x, y)| x * y.conj()).sum();
        s * self.weight
    }

    pub fn norm_sqr(&self) -> f64 {
        self.weight * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self { values: self.values.iter().map(|v| v * c).collect(), ..self.clone() }
    }

    /// Rescales to unit norm. Zero vectors are returned unchanged.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            return self.clone();
        }
        self.scaled(Complex64::new(1.0 / n, 0.0))
    }

    /// `sup_i |self_i - other_i|`.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `||self - other||` in the weighted norm.
    pub fn distance(&self, other: &StateVector) -> f64 {
        let s: f64 = self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm_sqr()).sum();
        (self.weight * s).sqrt()
    }
}
