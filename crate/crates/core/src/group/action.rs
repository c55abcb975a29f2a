//! Actions `tau: H -> Aut(K)` stored as permutation tables on element indices,
//! together with the induced action on characters, `omega_h = omega o tau_{h^-1}`.

use crate::error::{Error, Result};
use crate::group::abelian::FiniteAbelianGroup;
use crate::group::acting::ActingGroup;

/// Permutation table of an automorphism: `table[k]` is the index of `tau(k)`.
pub type AutomorphismTable = Vec<usize>;

/// Builds the table of `k -> M k (mod orders)`.
///
/// `M` must satisfy `M_ij * n_j = 0 (mod n_i)` for the map to be well defined
/// on residues, and the resulting map must be a bijection.
pub fn automorphism_from_matrix(group: &FiniteAbelianGroup, matrix: &[Vec<i64>]) -> Result<AutomorphismTable> {
    let r = group.rank();
    if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
        return Err(Error::InvalidForOrders(format!("expected a {r}x{r} integer matrix")));
    }
    let orders = group.orders();
    for i in 0..r {
        for j in 0..r {
            let ni = orders[i] as i64;
            let nj = orders[j] as i64;
            if (matrix[i][j] * nj).rem_euclid(ni) != 0 {
                return Err(Error::InvalidForOrders(format!(
                    "entry ({i},{j}) = {} maps Z_{nj} into Z_{ni} inconsistently",
                    matrix[i][j]
                )));
            }
        }
    }
    let mut table = Vec::with_capacity(group.size());
    let mut image = vec![0i64; r];
    for idx in 0..group.size() {
        let k = group.residues_of(idx);
        for i in 0..r {
            image[i] = (0..r).map(|j| matrix[i][j] * k[j] as i64).sum();
        }
        table.push(group.index_of(&group.reduce(&image)?)?);
    }
    check_automorphism(group, &table)?;
    Ok(table)
}

/// Checks that `table` is a bijective additive self-map of `group`.
pub fn check_automorphism(group: &FiniteAbelianGroup, table: &[usize]) -> Result<()> {
    let n = group.size();
    if table.len() != n {
        return Err(Error::NotAutomorphism(format!("table has {} entries, expected {n}", table.len())));
    }
    let mut seen = vec![false; n];
    for &t in table {
        if t >= n || seen[t] {
            return Err(Error::NotAutomorphism("map is not bijective".into()));
        }
        seen[t] = true;
    }
    for k in 0..n {
        for &g in &group.generators() {
            if table[group.add(k, g)] != group.add(table[k], table[g]) {
                return Err(Error::InvalidForOrders(format!("additivity fails at ({k},{g})")));
            }
        }
    }
    if table[0] != 0 {
        return Err(Error::InvalidForOrders("identity not fixed".into()));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct Action {
    acting: ActingGroup,
    group: FiniteAbelianGroup,
    automorphisms: Vec<AutomorphismTable>,
    dual_automorphisms: Vec<AutomorphismTable>,
    delta: Vec<f64>,
}

impl Action {
    /// Validates the assignment `h -> tau_h` and computes the dual action.
    pub fn new(acting: ActingGroup, group: FiniteAbelianGroup, assignment: Vec<AutomorphismTable>) -> Result<Self> {
        if assignment.len() != acting.order() {
            return Err(Error::NotHomomorphism(format!(
                "{} tables for a group of order {}",
                assignment.len(),
                acting.order()
            )));
        }
        for table in &assignment {
            check_automorphism(&group, table)?;
        }
        let action = Self::new_unchecked(acting, group, assignment);
        if let Some((h1, h2)) = action.homomorphism_violation() {
            return Err(Error::NotHomomorphism(format!("tau_({h1}*{h2}) != tau_{h1} o tau_{h2}")));
        }
        if action.automorphisms[action.acting.identity()].iter().enumerate().any(|(k, &t)| k != t) {
            return Err(Error::NotHomomorphism("tau_e is not the identity".into()));
        }
        Ok(action)
    }

    /// Builds an action without validating the tables. Used to inject faults
    /// into verification runs.
    #[doc(hidden)]
    pub fn new_unchecked(acting: ActingGroup, group: FiniteAbelianGroup, automorphisms: Vec<AutomorphismTable>) -> Self {
        let dual_automorphisms = (0..acting.order())
            .map(|h| dual_table(&group, &automorphisms[acting.inv(h)]))
            .collect();
        let delta = vec![1.0; acting.order()];
        Self { acting, group, automorphisms, dual_automorphisms, delta }
    }

    /// The trivial action of the one-element group.
    pub fn trivial(group: FiniteAbelianGroup) -> Self {
        let id = (0..group.size()).collect();
        Self::new_unchecked(ActingGroup::trivial(), group, vec![id])
    }

    /// The subgroup of `Aut(K)` generated by the given automorphism tables,
    /// acting tautologically.
    pub fn generated(group: FiniteAbelianGroup, generators: &[AutomorphismTable], cap: usize) -> Result<Self> {
        for g in generators {
            check_automorphism(&group, g)?;
        }
        let identity: AutomorphismTable = (0..group.size()).collect();
        let compose = |a: &AutomorphismTable, b: &AutomorphismTable| b.iter().map(|&k| a[k]).collect();
        let (acting, tables) = ActingGroup::generate(identity, generators, compose, cap)?;
        Self::new(acting, group, tables)
    }

    pub fn acting(&self) -> &ActingGroup {
        &self.acting
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    #[inline]
    pub fn tau(&self, h: usize, k: usize) -> usize {
        self.automorphisms[h][k]
    }

    /// `omega_h = omega o tau_{h^-1}`, by character index.
    #[inline]
    pub fn dual(&self, h: usize, a: usize) -> usize {
        self.dual_automorphisms[h][a]
    }

    pub fn delta(&self, h: usize) -> f64 {
        self.delta[h]
    }

    pub fn automorphism(&self, h: usize) -> &[usize] {
        &self.automorphisms[h]
    }

    pub fn dual_automorphism(&self, h: usize) -> &[usize] {
        &self.dual_automorphisms[h]
    }

    /// First pair with `tau_{h1 h2} != tau_{h1} o tau_{h2}`, if any.
    pub fn homomorphism_violation(&self) -> Option<(usize, usize)> {
        let n = self.acting.order();
        for h1 in 0..n {
            for h2 in 0..n {
                let prod = self.acting.mul(h1, h2);
                if (0..self.group.size()).any(|k| self.tau(prod, k) != self.tau(h1, self.tau(h2, k))) {
                    return Some((h1, h2));
                }
            }
        }
        None
    }

    /// Number of tables failing the automorphism check.
    pub fn automorphism_failures(&self) -> usize {
        self.automorphisms.iter().filter(|t| check_automorphism(&self.group, t).is_err()).count()
    }

    /// Number of `(h1, h2, a)` with `omega_{h1 h2} != (omega_{h2})_{h1}`.
    pub fn cocycle_failures(&self) -> usize {
        let n = self.acting.order();
        let mut failures = 0;
        for h1 in 0..n {
            for h2 in 0..n {
                let prod = self.acting.mul(h1, h2);
                failures += (0..self.group.size())
                    .filter(|&a| self.dual(prod, a) != self.dual(h1, self.dual(h2, a)))
                    .count();
            }
        }
        failures
    }
}

/// Character table of `omega -> omega o tau` located by matching values on the
/// canonical generators: `omega_{a'}(e_j) = exp(2 pi i a'_j / n_j)` pins `a'_j`.
fn dual_table(group: &FiniteAbelianGroup, tau: &[usize]) -> AutomorphismTable {
    let exponent = group.exponent();
    let basis = group.basis();
    (0..group.size())
        .map(|a| {
            group
                .orders()
                .iter()
                .enumerate()
                .map(|(j, &n)| {
                    let e = group.pairing(a, tau[basis[j]]);
                    (e * n / exponent) % n * group.stride(j)
                })
                .sum()
        })
        .collect()
}

/// Builds the action of `acting` given one automorphism table per element.
pub fn make_action(acting: ActingGroup, group: FiniteAbelianGroup, assignment: Vec<AutomorphismTable>) -> Result<Action> {
    Action::new(acting, group, assignment)
}

pub fn dual_action(action: &Action, h: usize, a: usize) -> Result<usize> {
    action.acting.check_index(h)?;
    action.group.check_index(a)?;
    Ok(action.dual(h, a))
}
