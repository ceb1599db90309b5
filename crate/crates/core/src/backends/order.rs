//! Order functions on universes and the submodularity check.

use crate::error::{Error, Result};
use crate::universe::{Sep, Universe};

use super::set::SetUniverse;

/// A cost per element of a universe, equal on both orientations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderFunction {
    values: Vec<u64>,
}

impl OrderFunction {
    /// `values[i]` is the order of the element with index `i`.
    pub fn new(u: &Universe, values: Vec<u64>) -> Result<Self> {
        if values.len() != u.len() {
            return Err(Error::Parse(format!("expected {} order values, got {}", u.len(), values.len())));
        }
        for s in u.elements() {
            if values[s.index()] != values[u.inv(s).index()] {
                return Err(Error::OrderNotSymmetric(u.id(s)));
            }
        }
        Ok(OrderFunction { values })
    }

    pub fn constant(u: &Universe, c: u64) -> Self {
        OrderFunction { values: vec![c; u.len()] }
    }

    /// `|A ∩ B|` on a set-separation universe.
    pub fn graph_order(su: &SetUniverse) -> Self {
        let values = su.universe.elements().map(|s| su.sides(s).order() as u64).collect();
        OrderFunction { values }
    }

    pub fn of(&self, s: Sep) -> u64 {
        self.values[s.index()]
    }

    /// The elements of order below `k`.
    pub fn below(&self, k: u64) -> Vec<Sep> {
        (0..self.values.len()).filter(|&i| self.values[i] < k).map(|i| Sep(i as u32)).collect()
    }
}

/// The least pair `(r, s)` with `|r ∨ s| + |r ∧ s| > |r| + |s|`.
pub fn submodularity_violation(order: &OrderFunction, u: &Universe) -> Result<Option<(Sep, Sep)>> {
    for r in u.elements() {
        for s in u.elements().filter(|&s| s >= r) {
            let (j, m) = match (u.join(r, s), u.meet(r, s)) {
                (Some(j), Some(m)) => (j, m),
                _ => return Err(Error::NoLattice),
            };
            if order.of(j) + order.of(m) > order.of(r) + order.of(s) {
                return Ok(Some((r, s)));
            }
        }
    }
    Ok(None)
}

pub fn is_submodular(order: &OrderFunction, u: &Universe) -> Result<bool> {
    Ok(submodularity_violation(order, u)?.is_none())
}
