//! Finite abelian groups `Z_{n_1} x ... x Z_{n_r}` and their character groups.
//!
//! Elements are addressed by a lexicographic index over residue tuples (the
//! last factor varies fastest). The dual group has the same shape: the label
//! `a` names the character `k -> exp(2 pi i sum_j a_j k_j / n_j)`, so the
//! character group reuses the element indexing and character multiplication is
//! index addition.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A residue tuple `k = (k_1, ..., k_r)` with `k_j` in `[0, n_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianElement {
    pub residues: Vec<usize>,
}

impl AbelianElement {
    pub fn new(residues: Vec<usize>) -> Self {
        Self { residues }
    }
}

/// The character `omega_a` labelled by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character {
    pub index: AbelianElement,
}

impl Character {
    pub fn new(label: AbelianElement) -> Self {
        Self { index: label }
    }
}

/// Exact table of `n`-th roots of unity, `table[j] = exp(2 pi i j / n)`.
#[derive(Clone, Debug)]
pub struct RootsOfUnity {
    table: Vec<Complex64>,
}

impl RootsOfUnity {
    pub fn new(n: usize) -> Self {
        let n = n.max(1);
        let table = (0..n)
            .map(|j| {
                // Snap quarter turns so that 1, i, -1, -i come out exact.
                if (4 * j) % n == 0 {
                    match (4 * j / n) % 4 {
                        0 => Complex64::new(1.0, 0.0),
                        1 => Complex64::new(0.0, 1.0),
                        2 => Complex64::new(-1.0, 0.0),
                        _ => Complex64::new(0.0, -1.0),
                    }
                } else {
                    Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64)
                }
            })
            .collect();
        Self { table }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn get(&self, exponent: usize) -> Complex64 {
        self.table[exponent % self.table.len()]
    }
}

#[derive(Clone, Debug)]
pub struct FiniteAbelianGroup {
    orders: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
    exponent: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    // pairing[a * size + k] = e with omega_a(k) = exp(2 pi i e / exponent)
    pairing: Vec<usize>,
    roots: RootsOfUnity,
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl FiniteAbelianGroup {
    /// Builds `Z_{n_1} x ... x Z_{n_r}`. An empty list gives the trivial group.
    pub fn new(orders: &[i64]) -> Result<Self> {
        let mut checked = Vec::with_capacity(orders.len());
        for &n in orders {
            if n < 1 {
                return Err(Error::InvalidOrder(n));
            }
            checked.push(n as usize);
        }
        Ok(Self::from_orders(checked))
    }

    fn from_orders(orders: Vec<usize>) -> Self {
        let size: usize = orders.iter().product();
        let exponent = orders.iter().copied().fold(1, lcm);
        let mut strides = vec![1; orders.len()];
        for j in (0..orders.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * orders[j + 1];
        }
        let mut group = Self {
            orders,
            strides,
            size,
            exponent,
            add: Vec::new(),
            neg: Vec::new(),
            pairing: Vec::new(),
            roots: RootsOfUnity::new(exponent),
        };
        group.build_tables();
        group
    }

    fn build_tables(&mut self) {
        let n = self.size;
        let residues: Vec<Vec<usize>> = (0..n).map(|i| self.residues_of(i)).collect();
        let mut add = vec![0; n * n];
        let mut pairing = vec![0; n * n];
        let mut neg = vec![0; n];
        let mut buf = vec![0; self.rank()];
        for i in 0..n {
            for (j, order) in self.orders.iter().enumerate() {
                buf[j] = (order - residues[i][j]) % order;
            }
            neg[i] = self.index_unchecked(&buf);
            for k in 0..n {
                for (j, order) in self.orders.iter().enumerate() {
                    buf[j] = (residues[i][j] + residues[k][j]) % order;
                }
                add[i * n + k] = self.index_unchecked(&buf);
                let mut e = 0usize;
                for (j, order) in self.orders.iter().enumerate() {
                    let scale = self.exponent / order;
                    e += (residues[i][j] * residues[k][j] % order) * scale;
                }
                pairing[i * n + k] = e % self.exponent;
            }
        }
        self.add = add;
        self.neg = neg;
        self.pairing = pairing;
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// The character group; finite abelian groups are self-dual.
    pub fn dual(&self) -> FiniteAbelianGroup {
        self.clone()
    }

    pub fn zero(&self) -> usize {
        0
    }

    fn index_unchecked(&self, residues: &[usize]) -> usize {
        residues.iter().zip(&self.strides).map(|(r, s)| r * s).sum()
    }

    pub fn index_of(&self, element: &AbelianElement) -> Result<usize> {
        self.validate(element)?;
        Ok(self.index_unchecked(&element.residues))
    }

    pub fn residues_of(&self, index: usize) -> Vec<usize> {
        self.orders
            .iter()
            .zip(&self.strides)
            .map(|(n, s)| (index / s) % n)
            .collect()
    }

    pub fn element(&self, index: usize) -> Result<AbelianElement> {
        self.check_index(index)?;
        Ok(AbelianElement::new(self.residues_of(index)))
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.size {
            return Err(Error::IndexOutOfRange { index, size: self.size });
        }
        Ok(())
    }

    pub fn validate(&self, element: &AbelianElement) -> Result<()> {
        if element.residues.len() != self.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), got: element.residues.len() });
        }
        for (&value, &order) in element.residues.iter().zip(&self.orders) {
            if value >= order {
                return Err(Error::ResidueOutOfRange { value, order });
            }
        }
        Ok(())
    }

    /// Reduces arbitrary integers componentwise into a valid element.
    pub fn reduce(&self, raw: &[i64]) -> Result<AbelianElement> {
        if raw.len() != self.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), got: raw.len() });
        }
        Ok(AbelianElement::new(
            raw.iter().zip(&self.orders).map(|(&v, &n)| v.rem_euclid(n as i64) as usize).collect(),
        ))
    }

    /// Componentwise sum modulo the factor orders.
    pub fn op(&self, k1: &AbelianElement, k2: &AbelianElement) -> Result<AbelianElement> {
        self.validate(k1)?;
        self.validate(k2)?;
        Ok(AbelianElement::new(
            k1.residues
                .iter()
                .zip(&k2.residues)
                .zip(&self.orders)
                .map(|((a, b), n)| (a + b) % n)
                .collect(),
        ))
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.size + j]
    }

    #[inline]
    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    #[inline]
    pub fn sub(&self, i: usize, j: usize) -> usize {
        self.add(i, self.neg[j])
    }

    /// `n * k` by index.
    pub fn scale(&self, k: usize, n: usize) -> usize {
        let mut buf = self.residues_of(k);
        for (r, order) in buf.iter_mut().zip(&self.orders) {
            *r = (*r * (n % order)) % order;
        }
        self.index_unchecked(&buf)
    }

    /// `e` such that `omega_a(k) = exp(2 pi i e / exponent)`.
    #[inline]
    pub fn pairing(&self, a: usize, k: usize) -> usize {
        self.pairing[a * self.size + k]
    }

    /// Evaluates `omega_a(k)` by index.
    #[inline]
    pub fn char_value(&self, a: usize, k: usize) -> Complex64 {
        self.roots.get(self.pairing(a, k))
    }

    pub fn char_eval(&self, a: &Character, k: &AbelianElement) -> Result<Complex64> {
        let ai = self.index_of(&a.index)?;
        let ki = self.index_of(k)?;
        Ok(self.char_value(ai, ki))
    }

    /// Canonical generators `e_j` (one per nontrivial factor), as indices.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.orders[j] > 1).map(|j| self.strides[j]).collect()
    }

    /// All canonical basis vectors `e_j`, including those of trivial factors.
    pub(crate) fn basis(&self) -> Vec<usize> {
        (0..self.rank()).map(|j| if self.orders[j] > 1 { self.strides[j] } else { 0 }).collect()
    }

    pub(crate) fn stride(&self, j: usize) -> usize {
        self.strides[j]
    }
}

pub fn make_abelian_group(orders: &[i64]) -> Result<FiniteAbelianGroup> {
    FiniteAbelianGroup::new(orders)
}
