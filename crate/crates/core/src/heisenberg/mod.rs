//! The semidirect product `G = H x_tau K` and the generalized Weyl-Heisenberg
//! group `(H x_tau K) x_theta (K^ x C_m)`.
//!
//! The circle is replaced by the cyclic group `C_m` of `m`-th roots of unity,
//! with `exponent(K) | m`. Phases are carried as integer exponents modulo `m`,
//! so every group operation is exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Action, ActingGroup, FiniteAbelianGroup, MeasureWeights, RootsOfUnity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemidirectElement {
    pub h: usize,
    pub k: usize,
}

/// `(h, k, omega_a, exp(2 pi i z / m))`, all by index.
///
/// Serializes as the integer quadruple `[h, k, a, z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 4]", into = "[usize; 4]")]
pub struct GwhElement {
    pub h: usize,
    pub k: usize,
    pub a: usize,
    pub z: usize,
}

impl GwhElement {
    pub fn new(h: usize, k: usize, a: usize, z: usize) -> Self {
        Self { h, k, a, z }
    }

    pub fn semidirect(&self) -> SemidirectElement {
        SemidirectElement { h: self.h, k: self.k }
    }
}

impl From<[usize; 4]> for GwhElement {
    fn from(q: [usize; 4]) -> Self {
        Self::new(q[0], q[1], q[2], q[3])
    }
}

impl From<GwhElement> for [usize; 4] {
    fn from(g: GwhElement) -> Self {
        [g.h, g.k, g.a, g.z]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusDiscretization {
    pub m: usize,
}

impl TorusDiscretization {
    pub fn new(m: usize, group: &FiniteAbelianGroup) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(group.exponent()) {
            return Err(Error::TorusDivisibility { exponent: group.exponent(), torus_order: m });
        }
        Ok(Self { m })
    }
}

/// Which `k` enters the phase slot of the product law. Only `Left` gives a
/// group; `Right` exists so verification runs can be fed a broken law.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseSlot {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct GwhGroup {
    action: Action,
    torus: TorusDiscretization,
    weights: MeasureWeights,
    roots: RootsOfUnity,
    phase_scale: usize,
    slot: PhaseSlot,
}

impl GwhGroup {
    pub fn new(action: Action, torus_order: usize, weights: MeasureWeights) -> Result<Self> {
        let torus = TorusDiscretization::new(torus_order, action.group())?;
        let phase_scale = torus.m / action.group().exponent();
        Ok(Self {
            action,
            torus,
            weights,
            roots: RootsOfUnity::new(torus_order),
            phase_scale,
            slot: PhaseSlot::Left,
        })
    }

    /// Default weights with `mu_H(H) = 1`.
    pub fn normalized(action: Action, torus_order: usize) -> Result<Self> {
        let w = MeasureWeights::normalized(action.acting().order(), action.group().size(), torus_order.max(1));
        Self::new(action, torus_order, w)
    }

    #[doc(hidden)]
    pub fn with_phase_slot(mut self, slot: PhaseSlot) -> Self {
        self.slot = slot;
        self
    }

    pub fn with_weights(mut self, weights: MeasureWeights) -> Self {
        self.weights = weights;
        self
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn acting(&self) -> &ActingGroup {
        self.action.acting()
    }

    pub fn k_group(&self) -> &FiniteAbelianGroup {
        self.action.group()
    }

    pub fn weights(&self) -> &MeasureWeights {
        &self.weights
    }

    pub fn torus_order(&self) -> usize {
        self.torus.m
    }

    pub fn roots(&self) -> &RootsOfUnity {
        &self.roots
    }

    pub fn h_order(&self) -> usize {
        self.acting().order()
    }

    pub fn k_size(&self) -> usize {
        self.k_group().size()
    }

    pub fn h_mass(&self) -> f64 {
        self.weights.h_mass(self.h_order())
    }

    /// `|H| |K| |K^| m`.
    pub fn size(&self) -> usize {
        self.h_order() * self.k_size() * self.k_size() * self.torus.m
    }

    pub fn semidirect_size(&self) -> usize {
        self.h_order() * self.k_size()
    }

    /// `omega_a(k)` as an exponent of `exp(2 pi i / m)`.
    #[inline]
    pub fn char_phase(&self, a: usize, k: usize) -> usize {
        self.k_group().pairing(a, k) * self.phase_scale
    }

    /// Lexicographic position in `(h, k, a, z)`.
    pub fn index_of(&self, g: &GwhElement) -> usize {
        let n = self.k_size();
        ((g.h * n + g.k) * n + g.a) * self.torus.m + g.z
    }

    pub fn element(&self, index: usize) -> GwhElement {
        let n = self.k_size();
        let m = self.torus.m;
        let z = index % m;
        let a = (index / m) % n;
        let k = (index / (m * n)) % n;
        let h = index / (m * n * n);
        GwhElement { h, k, a, z }
    }

    pub fn elements(&self) -> impl Iterator<Item = GwhElement> + '_ {
        (0..self.size()).map(|i| self.element(i))
    }

    pub fn identity(&self) -> GwhElement {
        GwhElement::new(self.acting().identity(), 0, 0, 0)
    }

    pub fn sd_identity(&self) -> SemidirectElement {
        SemidirectElement { h: self.acting().identity(), k: 0 }
    }

    pub fn check(&self, g: &GwhElement) -> Result<()> {
        self.acting().check_index(g.h)?;
        self.k_group().check_index(g.k)?;
        self.k_group().check_index(g.a)?;
        if g.z >= self.torus.m {
            return Err(Error::IndexOutOfRange { index: g.z, size: self.torus.m });
        }
        Ok(())
    }

    /// `(h1, k1)(h2, k2) = (h1 h2, k1 + tau_{h1}(k2))`.
    pub fn sd_mul(&self, x1: SemidirectElement, x2: SemidirectElement) -> SemidirectElement {
        SemidirectElement {
            h: self.acting().mul(x1.h, x2.h),
            k: self.k_group().add(x1.k, self.action.tau(x1.h, x2.k)),
        }
    }

    /// `(h, k)^-1 = (h^-1, tau_{h^-1}(-k))`.
    pub fn sd_inv(&self, x: SemidirectElement) -> SemidirectElement {
        let hinv = self.acting().inv(x.h);
        SemidirectElement { h: hinv, k: self.action.tau(hinv, self.k_group().neg(x.k)) }
    }

    /// `theta_{(h,k)}(omega, z) = (omega_h, omega_h(k) z)`.
    pub fn theta_apply(&self, x: SemidirectElement, a: usize, z: usize) -> (usize, usize) {
        let ah = self.action.dual(x.h, a);
        (ah, (self.char_phase(ah, x.k) + z) % self.torus.m)
    }

    /// `(h1 h2, k1 + tau_{h1}(k2), omega_1 (omega_2)_{h1}, (omega_2)_{h1}(k1) z1 z2)`.
    pub fn gwh_mul(&self, g1: &GwhElement, g2: &GwhElement) -> GwhElement {
        let x = self.sd_mul(g1.semidirect(), g2.semidirect());
        let a2h = self.action.dual(g1.h, g2.a);
        let slot_k = match self.slot {
            PhaseSlot::Left => g1.k,
            PhaseSlot::Right => g2.k,
        };
        GwhElement {
            h: x.h,
            k: x.k,
            a: self.k_group().add(g1.a, a2h),
            z: (self.char_phase(a2h, slot_k) + g1.z + g2.z) % self.torus.m,
        }
    }

    /// `(x, n)^-1 = (x^-1, theta_{x^-1}(n^-1))`.
    pub fn gwh_inv(&self, g: &GwhElement) -> GwhElement {
        let xinv = self.sd_inv(g.semidirect());
        let m = self.torus.m;
        let (a, z) = self.theta_apply(xinv, self.k_group().neg(g.a), (m - g.z) % m);
        GwhElement { h: xinv.h, k: xinv.k, a, z }
    }

    /// Checked multiplication; both elements must be valid for this group.
    pub fn try_mul(&self, g1: &GwhElement, g2: &GwhElement) -> Result<GwhElement> {
        self.check(g1)?;
        self.check(g2)?;
        Ok(self.gwh_mul(g1, g2))
    }

    /// `w_H w_K w_Kdual w_T`, constant over the group.
    pub fn haar_weight(&self, _g: &GwhElement) -> f64 {
        self.point_weight()
    }

    pub fn point_weight(&self) -> f64 {
        let w = &self.weights;
        w.w_h * w.w_k * w.w_kdual * w.w_t
    }

    /// Total Haar mass of the group.
    pub fn total_mass(&self) -> f64 {
        self.point_weight() * self.size() as f64
    }

    /// Generators of each factor: `(h, 0, 0, 0)`, `(e, k_gen, 0, 0)`,
    /// `(e, 0, a_gen, 0)` and `(e, 0, 0, 1)`.
    pub fn generators(&self) -> Vec<GwhElement> {
        let e = self.acting().identity();
        let mut gens: Vec<GwhElement> =
            self.acting().generators().iter().map(|&h| GwhElement::new(h, 0, 0, 0)).collect();
        let kgens = self.k_group().generators();
        gens.extend(kgens.iter().map(|&k| GwhElement::new(e, k, 0, 0)));
        gens.extend(kgens.iter().map(|&a| GwhElement::new(e, 0, a, 0)));
        if self.torus.m > 1 {
            gens.push(GwhElement::new(e, 0, 0, 1));
        }
        gens
    }
}
