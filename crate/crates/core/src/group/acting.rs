use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite group `H` given by its multiplication table.
#[derive(Clone, Debug, PartialEq)]
pub struct ActingGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl ActingGroup {
    /// Validates `table` (row-major, `table[i * n + j] = i * j`) as a group.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("empty element list".into()));
        }
        if table.len() != order * order {
            return Err(Error::NotAGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::NotAGroup(format!("entry {bad} out of range")));
        }
        let mul = |i: usize, j: usize| table[i * order + j];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let generators = (0..order).filter(|&x| x != identity).collect();
        Ok(Self { order, table, identity, inverse, generators })
    }

    pub fn trivial() -> Self {
        Self { order: 1, table: vec![0], identity: 0, inverse: vec![0], generators: Vec::new() }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n * n).map(|ij| (ij / n + ij % n) % n.max(1)).collect();
        let mut g = Self::from_table(n, table)?;
        g.generators = if n > 1 { vec![1] } else { Vec::new() };
        Ok(g)
    }

    /// Enumerates the group generated by `generators` under `mul`, breadth
    /// first from `identity`. Element 0 of the result is the identity and
    /// elements appear in discovery order.
    pub fn generate<T, F>(identity: T, generators: &[T], mul: F, cap: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut position: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut cursor = 0;
        while cursor < elements.len() {
            let current = elements[cursor].clone();
            for g in generators {
                let next = mul(&current, g);
                if !position.contains_key(&next) {
                    if elements.len() == cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    position.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            cursor += 1;
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = mul(&elements[i], &elements[j]);
                table[i * n + j] = *position
                    .get(&p)
                    .ok_or_else(|| Error::NotAGroup("generated set does not close".into()))?;
            }
        }
        let mut group = Self::from_table(n, table)?;
        let mut gens: Vec<usize> = generators.iter().map(|g| position[g]).filter(|&i| i != 0).collect();
        gens.dedup();
        group.generators = gens;
        Ok((group, elements))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// A generating set (identity excluded).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.order {
            return Err(Error::IndexOutOfRange { index: i, size: self.order });
        }
        Ok(())
    }
}
