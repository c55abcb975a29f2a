//! The three unitary representations as monomial operators.
//!
//! * `pi` on `L^2(K^)`:
//!   `(pi(h,k,w,z) f)(xi) = delta(h)^{-1/2} z xi(k) conj(w(k)) f((xi conj(w)) o tau_h)`
//! * `pi~` on `L^2(K)`:
//!   `(pi~(h,k,w,z) f)(k') = delta(h)^{1/2} z w(k') f(tau_{h^-1}(k' + k))`
//! * `rho` on `L^2(K^ x C_m)`, the quasi-regular representation:
//!   `(rho(h,k,w,z) f)(xi,t) = delta(h)^{-1/2} f((xi conj(w)) o tau_h, (xi conj(w))(-k) t conj(z))`

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::{GwhElement, GwhGroup};
use crate::repr::monomial::Monomial;
use crate::repr::state::{Space, StateVector};
use crate::repr::UnitaryOperator;

/// Default cap on materialized matrix dimension.
pub const MATRIX_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    Pi,
    #[serde(rename = "pitilde")]
    PiTilde,
    Rho,
}

impl Rep {
    pub const ALL: [Rep; 3] = [Rep::Pi, Rep::PiTilde, Rep::Rho];

    pub fn space(self) -> Space {
        match self {
            Rep::Pi => Space::Dual,
            Rep::PiTilde => Space::Group,
            Rep::Rho => Space::Quasi,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rep::Pi => "pi",
            Rep::PiTilde => "pitilde",
            Rep::Rho => "rho",
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Rep::Pi),
            "pitilde" | "pi_tilde" => Ok(Rep::PiTilde),
            "rho" => Ok(Rep::Rho),
            other => Err(Error::Config { field: "rep".into(), message: format!("unknown representation `{other}`") }),
        }
    }
}

/// The operator `rep(g)` in monomial form.
pub fn rep_monomial(group: &GwhGroup, rep: Rep, g: &GwhElement) -> Monomial {
    match rep {
        Rep::Pi => pi_monomial(group, g),
        Rep::PiTilde => pi_tilde_monomial(group, g),
        Rep::Rho => rho_monomial(group, g),
    }
}

fn pi_monomial(group: &GwhGroup, g: &GwhElement) -> Monomial {
    let kg = group.k_group();
    let act = group.action();
    let m = group.torus_order();
    let hinv = group.acting().inv(g.h);
    let scale = act.delta(g.h).powf(-0.5);
    let wk = group.char_phase(g.a, g.k);
    let n = kg.size();
    let mut source = Vec::with_capacity(n);
    let mut phase = Vec::with_capacity(n);
    for xi in 0..n {
        // (xi conj(w)) o tau_h = (xi conj(w))_{h^-1}
        source.push(act.dual(hinv, kg.sub(xi, g.a)));
        let e = g.z + group.char_phase(xi, g.k) + m - wk;
        phase.push(group.roots().get(e) * scale);
    }
    Monomial { source, phase }
}

fn pi_tilde_monomial(group: &GwhGroup, g: &GwhElement) -> Monomial {
    let kg = group.k_group();
    let act = group.action();
    let hinv = group.acting().inv(g.h);
    let scale = act.delta(g.h).sqrt();
    let n = kg.size();
    let mut source = Vec::with_capacity(n);
    let mut phase = Vec::with_capacity(n);
    for kp in 0..n {
        source.push(act.tau(hinv, kg.add(kp, g.k)));
        phase.push(group.roots().get(g.z + group.char_phase(g.a, kp)) * scale);
    }
    Monomial { source, phase }
}

fn rho_monomial(group: &GwhGroup, g: &GwhElement) -> Monomial {
    let kg = group.k_group();
    let act = group.action();
    let m = group.torus_order();
    let hinv = group.acting().inv(g.h);
    let scale = num_complex::Complex64::new(act.delta(g.h).powf(-0.5), 0.0);
    let n = kg.size();
    let mut source = Vec::with_capacity(n * m);
    for xi in 0..n {
        let c = kg.sub(xi, g.a);
        let target = act.dual(hinv, c);
        // (xi conj(w))(-k) = conj((xi conj(w))(k))
        let shift = m - group.char_phase(c, g.k) % m;
        for t in 0..m {
            let tp = (t + 2 * m - g.z + shift) % m;
            source.push(target * m + tp);
        }
    }
    Monomial { source, phase: vec![scale; n * m] }
}

fn check_input(group: &GwhGroup, rep: Rep, g: &GwhElement, f: &StateVector) -> Result<()> {
    group.check(g)?;
    f.expect_space(rep.space())?;
    let dim = rep.space().dim(group);
    if f.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: f.dim() });
    }
    Ok(())
}

/// `rep(g) f`.
pub fn rep_apply(group: &GwhGroup, rep: Rep, g: &GwhElement, f: &StateVector) -> Result<StateVector> {
    check_input(group, rep, g, f)?;
    let values = rep_monomial(group, rep, g).apply(f.values());
    Ok(StateVector::from_parts(f.space(), values, f.weight()))
}

pub fn pi_apply(group: &GwhGroup, g: &GwhElement, f: &StateVector) -> Result<StateVector> {
    rep_apply(group, Rep::Pi, g, f)
}

pub fn pi_tilde_apply(group: &GwhGroup, g: &GwhElement, f: &StateVector) -> Result<StateVector> {
    rep_apply(group, Rep::PiTilde, g, f)
}

pub fn rho_apply(group: &GwhGroup, g: &GwhElement, f: &StateVector) -> Result<StateVector> {
    rep_apply(group, Rep::Rho, g, f)
}

/// Dense matrix of `rep(g)`; refuses dimensions above `cap`.
pub fn rep_matrix(group: &GwhGroup, rep: Rep, g: &GwhElement, cap: usize) -> Result<UnitaryOperator> {
    group.check(g)?;
    let dim = rep.space().dim(group);
    if dim > cap {
        return Err(Error::MatrixCap { dim, cap });
    }
    Ok(UnitaryOperator::new(rep.space(), rep_monomial(group, rep, g).to_matrix()))
}

pub fn pi_matrix(group: &GwhGroup, g: &GwhElement) -> Result<UnitaryOperator> {
    rep_matrix(group, Rep::Pi, g, MATRIX_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_abelian_group, Action};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pi_on_z2_by_hand() {
        let g = GwhGroup::normalized(Action::trivial(make_abelian_group(&[2]).unwrap()), 2).unwrap();
        let f = StateVector::new(&g, Space::Dual, vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let out = pi_apply(&g, &GwhElement::new(0, 1, 0, 0), &f).unwrap();
        assert_eq!(out.values(), &[c(1.0, 0.0), c(0.0, 0.0)]);
        // phase pattern xi(1) = (1, -1) on a generic vector
        let f = StateVector::new(&g, Space::Dual, vec![c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        let out = pi_apply(&g, &GwhElement::new(0, 1, 0, 0), &f).unwrap();
        assert_eq!(out.values(), &[c(2.0, 0.0), c(-3.0, 0.0)]);
        // modulation by omega_1 permutes the two characters
        let out = pi_apply(&g, &GwhElement::new(0, 0, 1, 0), &f).unwrap();
        assert_eq!(out.values(), &[c(3.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn identity_acts_trivially() {
        let g = GwhGroup::normalized(Action::trivial(make_abelian_group(&[3, 2]).unwrap()), 6).unwrap();
        for rep in Rep::ALL {
            let mono = rep_monomial(&g, rep, &g.identity());
            assert_eq!(mono, Monomial::identity(rep.space().dim(&g)));
        }
    }

    #[test]
    fn pi_matrix_is_monomial_and_capped() {
        let g = GwhGroup::normalized(Action::trivial(make_abelian_group(&[4]).unwrap()), 4).unwrap();
        let m = pi_matrix(&g, &GwhElement::new(0, 1, 3, 2)).unwrap();
        for i in 0..4 {
            assert_eq!(m.matrix().row(i).iter().filter(|v| v.norm() > 0.0).count(), 1);
            assert_eq!(m.matrix().column(i).iter().filter(|v| v.norm() > 0.0).count(), 1);
        }
        assert!(m.unitarity_deviation() < 1e-12);
        assert!(matches!(
            rep_matrix(&g, Rep::Rho, &g.identity(), 8),
            Err(Error::MatrixCap { dim: 16, cap: 8 })
        ));
    }

    #[test]
    fn rejects_wrong_space() {
        let g = GwhGroup::normalized(Action::trivial(make_abelian_group(&[4]).unwrap()), 4).unwrap();
        let f = StateVector::zeros(&g, Space::Group);
        assert!(matches!(pi_apply(&g, &g.identity(), &f), Err(Error::SpaceMismatch { .. })));
        assert!(pi_tilde_apply(&g, &GwhElement::new(0, 4, 0, 0), &f).is_err());
        assert!("sigma".parse::<Rep>().is_err());
        assert_eq!("pitilde".parse::<Rep>().unwrap(), Rep::PiTilde);
    }
}
