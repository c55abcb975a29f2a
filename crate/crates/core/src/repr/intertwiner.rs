use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::GwhGroup;
use crate::repr::max_modulus;
use crate::repr::ops::{rep_monomial, Rep};

/// Candidate intertwiners `L^2(K) -> L^2(K^)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FourierDirection {
    /// Kernel `w_K conj(w(k))`, the transform of [`fourier_k`](crate::repr::fourier_k).
    Forward,
    /// Kernel `w_K w(k)`.
    Adjoint,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntertwinerReport {
    pub direction_used: FourierDirection,
    pub max_deviation: f64,
    pub forward_deviation: f64,
    pub adjoint_deviation: f64,
    pub generators_checked: usize,
}

impl IntertwinerReport {
    /// Turns the diagnostic into an error when no direction is within `tol`.
    pub fn require(self, tol: f64) -> Result<Self> {
        if self.max_deviation > tol {
            return Err(Error::EquivalenceFailed(self.max_deviation));
        }
        Ok(self)
    }
}

fn kernel(group: &GwhGroup, direction: FourierDirection) -> DMatrix<Complex64> {
    let kg = group.k_group();
    let n = kg.size();
    let wk = group.weights().w_k;
    DMatrix::from_fn(n, n, |a, k| {
        let v = kg.char_value(a, k) * wk;
        match direction {
            FourierDirection::Forward => v.conj(),
            FourierDirection::Adjoint => v,
        }
    })
}

/// Checks `F pi~(g) F^-1 = pi(g)` on the generating set for both candidate
/// Fourier operators and reports the better one.
pub fn intertwiner_check(group: &GwhGroup, cap: usize) -> Result<IntertwinerReport> {
    let n = group.k_size();
    if n > cap {
        return Err(Error::MatrixCap { dim: n, cap });
    }
    let gens = group.generators();
    let deviation = |direction| -> Result<f64> {
        let f = kernel(group, direction);
        let finv = f
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Internal("Fourier kernel is singular".into()))?;
        let mut worst = 0.0f64;
        for g in &gens {
            let tilde = rep_monomial(group, Rep::PiTilde, g).to_matrix();
            let pi = rep_monomial(group, Rep::Pi, g).to_matrix();
            let conj = &f * tilde * &finv;
            worst = worst.max(max_modulus(&(conj - pi)));
        }
        Ok(worst)
    };
    let forward = deviation(FourierDirection::Forward)?;
    let adjoint = deviation(FourierDirection::Adjoint)?;
    let (direction_used, max_deviation) = if forward <= adjoint {
        (FourierDirection::Forward, forward)
    } else {
        (FourierDirection::Adjoint, adjoint)
    };
    Ok(IntertwinerReport {
        direction_used,
        max_deviation,
        forward_deviation: forward,
        adjoint_deviation: adjoint,
        generators_checked: gens.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_abelian_group, Action};

    #[test]
    fn heisenberg_on_z2() {
        let g = GwhGroup::normalized(Action::trivial(make_abelian_group(&[2]).unwrap()), 2).unwrap();
        let r = intertwiner_check(&g, 256).unwrap();
        assert!(r.max_deviation <= 1e-9);
        assert_eq!(r.generators_checked, 3);
    }

    #[test]
    fn trivial_group_has_zero_deviation() {
        let g = GwhGroup::normalized(Action::trivial(make_abelian_group(&[1]).unwrap()), 1).unwrap();
        let r = intertwiner_check(&g, 256).unwrap();
        assert_eq!(r.max_deviation, 0.0);
        assert_eq!(r.generators_checked, 0);
    }

    #[test]
    fn only_forward_works_on_z3() {
        let g = GwhGroup::normalized(Action::trivial(make_abelian_group(&[3]).unwrap()), 3).unwrap();
        let r = intertwiner_check(&g, 256).unwrap();
        assert_eq!(r.direction_used, FourierDirection::Forward);
        assert!(r.adjoint_deviation > 0.1);
        assert!(r.clone().require(1e-9).is_ok());
        assert!(intertwiner_check(&g, 2).is_err());
    }
}
