//! Numerical Schur test: the dimension of the commutant of a set of unitaries.
//!
//! For unitaries `M_1..M_S` the commutant is the common fixed space of the
//! maps `A -> M_s^* A M_s`. Averaging these maps with their adjoints gives a
//! Hermitian operator `Phi` on `C^{N x N}` whose eigenvalue-1 eigenspace is
//! exactly that fixed space, so the commutant is the null space of the
//! positive semidefinite `I - Phi`. Its eigenvalues are its singular values.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::GwhGroup;
use crate::repr::monomial::Monomial;
use crate::repr::ops::{rep_monomial, Rep};

/// Singular values below `NULL_TOL * sigma_max` count as zero.
pub const NULL_TOL: f64 = 1e-8;
/// Singular values in `[NULL_TOL, GAP_TOL) * sigma_max` make the count ambiguous.
pub const GAP_TOL: f64 = 1e-5;
/// Largest representation dimension the solver accepts by default.
pub const COMMUTANT_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommutantReport {
    pub dimension: usize,
    pub sigma_max: f64,
    /// Smallest singular value counted as nonzero, if any.
    pub smallest_nonzero: Option<f64>,
}

/// Commutant dimension of the given square unitaries (all the same size).
pub fn commutant_of(matrices: &[DMatrix<Complex64>]) -> Result<CommutantReport> {
    let Some(first) = matrices.first() else {
        return Err(Error::Internal("empty generating set; commutant is the full matrix algebra".into()));
    };
    let n = first.nrows();
    if matrices.iter().any(|m| m.nrows() != n || m.ncols() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: 0 });
    }
    let nn = n * n;
    let mut phi = DMatrix::<Complex64>::zeros(nn, nn);
    for m in matrices {
        phi += m.transpose().kronecker(&m.adjoint());
        phi += m.map(|v| v.conj()).kronecker(m);
    }
    let scale = Complex64::new(1.0 / (2 * matrices.len()) as f64, 0.0);
    let op = DMatrix::<Complex64>::identity(nn, nn) - phi * scale;
    let mut sv: Vec<f64> = op.symmetric_eigenvalues().iter().map(|v| v.abs()).collect();
    sv.sort_by(|a, b| a.total_cmp(b));
    let sigma_max = sv.last().copied().unwrap_or(0.0);
    if sigma_max == 0.0 {
        return Ok(CommutantReport { dimension: nn, sigma_max, smallest_nonzero: None });
    }
    let ambiguous: Vec<f64> =
        sv.iter().copied().filter(|&s| s >= NULL_TOL * sigma_max && s < GAP_TOL * sigma_max).collect();
    if !ambiguous.is_empty() {
        return Err(Error::Indeterminate { tail: sv.iter().copied().take(ambiguous.len() + 4).collect() });
    }
    let dimension = sv.iter().filter(|&&s| s < NULL_TOL * sigma_max).count();
    Ok(CommutantReport { dimension, sigma_max, smallest_nonzero: sv.get(dimension).copied() })
}

/// Generator matrices of `rep`, materialized.
pub fn generator_matrices(group: &GwhGroup, rep: Rep) -> Vec<DMatrix<Complex64>> {
    group.generators().iter().map(|g| rep_monomial(group, rep, g).to_matrix()).collect()
}

/// Commutant dimension of `rep` over the generating set of the group; 1 iff
/// the representation is irreducible.
pub fn commutant_dimension(group: &GwhGroup, rep: Rep, cap: usize) -> Result<usize> {
    let dim = rep.space().dim(group);
    if dim > cap {
        return Err(Error::MatrixCap { dim, cap });
    }
    let mats = generator_matrices(group, rep);
    if mats.is_empty() {
        // trivial group: every operator commutes
        return Ok(dim * dim);
    }
    Ok(commutant_of(&mats)?.dimension)
}

/// Commutant dimension of a group generated by monomial unitaries, counted
/// exactly.
///
/// `A` commutes with `M` iff `A_ij = p_i conj(p_j) A_{s_i s_j}`, so the
/// generators move the matrix units `E_ij` around in orbits with phases. An
/// orbit carries one commuting matrix when the phases close up consistently
/// and none otherwise.
pub fn monomial_commutant_dimension(generators: &[Monomial]) -> Result<usize> {
    let Some(first) = generators.first() else {
        return Err(Error::Internal("empty generating set; commutant is the full matrix algebra".into()));
    };
    let n = first.dim();
    if generators.iter().any(|g| g.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: 0 });
    }
    let mut value: Vec<Option<Complex64>> = vec![None; n * n];
    let mut dimension = 0;
    for root in 0..n * n {
        if value[root].is_some() {
            continue;
        }
        value[root] = Some(Complex64::new(1.0, 0.0));
        let mut stack = vec![root];
        let mut consistent = true;
        while let Some(ij) = stack.pop() {
            let (i, j) = (ij / n, ij % n);
            let v = value[ij].expect("visited");
            for g in generators {
                let next = g.source[i] * n + g.source[j];
                let c = g.phase[i] * g.phase[j].conj();
                let want = v / c;
                match value[next] {
                    Some(w) => consistent &= (w - want).norm() <= 1e-9,
                    None => {
                        value[next] = Some(want);
                        stack.push(next);
                    }
                }
            }
        }
        if consistent {
            dimension += 1;
        }
    }
    Ok(dimension)
}

/// Block-diagonal `a (+) b`.
pub fn direct_sum(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (n, m) = (a.nrows(), b.nrows());
    let mut out = DMatrix::zeros(n + m, n + m);
    out.view_mut((0, 0), (n, n)).copy_from(a);
    out.view_mut((n, n), (m, m)).copy_from(b);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_abelian_group, Action};

    fn wh(n: i64) -> GwhGroup {
        GwhGroup::normalized(Action::trivial(make_abelian_group(&[n]).unwrap()), n as usize).unwrap()
    }

    #[test]
    fn finite_weyl_heisenberg_is_irreducible() {
        assert_eq!(commutant_dimension(&wh(4), Rep::Pi, 32).unwrap(), 1);
        assert_eq!(commutant_dimension(&wh(4), Rep::PiTilde, 32).unwrap(), 1);
    }

    #[test]
    fn trivial_group_is_scalars() {
        let g = wh(1);
        assert_eq!(commutant_dimension(&g, Rep::Pi, 32).unwrap(), 1);
    }

    #[test]
    fn doubled_representation_has_four_dim_commutant() {
        let g = wh(4);
        let mats: Vec<_> = generator_matrices(&g, Rep::Pi).iter().map(|m| direct_sum(m, m)).collect();
        assert_eq!(commutant_of(&mats).unwrap().dimension, 4);
    }

    #[test]
    fn diagonal_generator_alone() {
        // the commutant of a diagonal with distinct entries is the diagonal algebra
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_fn(3, |i, _| {
            Complex64::from_polar(1.0, i as f64)
        }));
        assert_eq!(commutant_of(&[d]).unwrap().dimension, 3);
        assert!(commutant_dimension(&wh(8), Rep::Rho, 32).is_err());
    }

    #[test]
    fn orbit_count_matches_numerical_solver() {
        for n in [2, 3, 4] {
            let g = wh(n);
            for rep in Rep::ALL {
                let monos: Vec<_> = g.generators().iter().map(|x| rep_monomial(&g, rep, x)).collect();
                let mats: Vec<_> = monos.iter().map(|m| m.to_matrix()).collect();
                if mats[0].nrows() > 16 {
                    continue;
                }
                assert_eq!(monomial_commutant_dimension(&monos).unwrap(), commutant_of(&mats).unwrap().dimension);
                let doubled: Vec<_> = monos.iter().map(|m| m.direct_sum(m)).collect();
                let dense: Vec<_> = mats.iter().map(|m| direct_sum(m, m)).collect();
                assert_eq!(
                    monomial_commutant_dimension(&doubled).unwrap(),
                    commutant_of(&dense).unwrap().dimension
                );
            }
        }
    }
}
