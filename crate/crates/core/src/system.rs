//! Separation systems inside a universe, and the elementary predicates on
//! them: smallness, triviality, nestedness, consistency, orientations.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::universe::{Sep, Universe};

/// An involution-closed subset of a universe, with the induced order.
#[derive(Clone, Debug)]
pub struct SeparationSystem {
    universe: Arc<Universe>,
    members: Vec<Sep>,
    is_member: FixedBitSet,
    /// Underlying separations, as their least-id orientation.
    separations: Vec<Sep>,
    degenerate: Vec<Sep>,
    /// Least-id witness of triviality, per universe element (members only).
    witness: Vec<Option<Sep>>,
}

impl SeparationSystem {
    pub fn new(universe: Arc<Universe>, members: impl IntoIterator<Item = Sep>) -> Result<Self> {
        let n = universe.len();
        let mut is_member = FixedBitSet::with_capacity(n);
        for s in members {
            if s.index() >= n {
                return Err(Error::UnknownId(s.0 as u64));
            }
            is_member.insert(s.index());
        }
        for s in is_member.ones() {
            let s = Sep(s as u32);
            if !is_member.contains(universe.inv(s).index()) {
                return Err(Error::MembersNotClosed(universe.id(s)));
            }
        }
        let members: Vec<Sep> = is_member.ones().map(|i| Sep(i as u32)).collect();
        let separations: Vec<Sep> = members.iter().copied().filter(|&s| s <= universe.inv(s)).collect();
        let degenerate = separations.iter().copied().filter(|&s| universe.is_degenerate(s)).collect();
        let mut witness = vec![None; n];
        for &r in &members {
            witness[r.index()] = separations
                .iter()
                .copied()
                .find(|&s| universe.lt(r, s) && universe.lt(r, universe.inv(s)));
        }
        Ok(SeparationSystem { universe, members, is_member, separations, degenerate, witness })
    }

    /// The whole universe as a separation system.
    pub fn full(universe: Arc<Universe>) -> Self {
        let all: Vec<Sep> = universe.elements().collect();
        Self::new(universe, all).expect("a universe is closed under its involution")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn universe_arc(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// All oriented members, ascending.
    pub fn members(&self) -> &[Sep] {
        &self.members
    }

    /// One representative (the least-id orientation) per underlying separation.
    pub fn separations(&self) -> &[Sep] {
        &self.separations
    }

    pub fn nondegenerate_separations(&self) -> impl Iterator<Item = Sep> + '_ {
        self.separations.iter().copied().filter(|&s| !self.universe.is_degenerate(s))
    }

    /// Degenerate members.
    pub fn degenerate(&self) -> &[Sep] {
        &self.degenerate
    }

    #[inline]
    pub fn contains(&self, s: Sep) -> bool {
        self.is_member.contains(s.index())
    }

    #[inline]
    pub fn inv(&self, s: Sep) -> Sep {
        self.universe.inv(s)
    }

    #[inline]
    pub fn leq(&self, a: Sep, b: Sep) -> bool {
        self.universe.leq(a, b)
    }

    #[inline]
    pub fn lt(&self, a: Sep, b: Sep) -> bool {
        self.universe.lt(a, b)
    }

    pub fn is_degenerate(&self, s: Sep) -> bool {
        self.universe.is_degenerate(s)
    }

    pub fn is_small(&self, s: Sep) -> bool {
        self.universe.is_small(s)
    }

    /// The least-id `s` in this system with `r < s` and `r < s*`, if any.
    pub fn triviality_witness(&self, r: Sep) -> Option<Sep> {
        if self.contains(r) {
            self.witness[r.index()]
        } else {
            None
        }
    }

    pub fn is_trivial(&self, r: Sep) -> bool {
        self.triviality_witness(r).is_some()
    }

    pub fn is_cotrivial(&self, r: Sep) -> bool {
        self.is_trivial(self.inv(r))
    }

    /// Neither orientation is trivial.
    pub fn is_nontrivial_separation(&self, s: Sep) -> bool {
        !self.is_trivial(s) && !self.is_cotrivial(s)
    }

    /// Members trivial in this system, ascending.
    pub fn trivial_members(&self) -> Vec<Sep> {
        self.members.iter().copied().filter(|&s| self.is_trivial(s)).collect()
    }

    /// Two separations are nested if some orientations are comparable.
    pub fn is_nested(&self, r: Sep, s: Sep) -> bool {
        let u = &self.universe;
        [r, u.inv(r)].iter().any(|&a| [s, u.inv(s)].iter().any(|&b| u.comparable(a, b)))
    }

    /// A pair `(a, b)` from `set`, orientations of distinct separations,
    /// with `a* < b`: they point away from each other.
    pub fn consistency_violation(&self, set: &[Sep]) -> Option<(Sep, Sep)> {
        let u = &self.universe;
        for &a in set {
            for &b in set {
                if u.underlying(a) != u.underlying(b) && u.lt(u.inv(a), b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_consistent(&self, set: &[Sep]) -> bool {
        self.consistency_violation(set).is_none()
    }

    /// Contains exactly one orientation of every separation of the system
    /// and nothing else.
    pub fn is_orientation(&self, set: &[Sep]) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.universe.len());
        for &s in set {
            if !self.contains(s) {
                return false;
            }
            let base = self.universe.underlying(s);
            if seen.contains(base.index()) {
                return false;
            }
            seen.insert(base.index());
        }
        self.separations.iter().all(|s| seen.contains(s.index()))
    }

    /// An antisymmetric subset of the members.
    pub fn is_partial_orientation(&self, set: &[Sep]) -> bool {
        set.iter().all(|&s| self.contains(s)) && self.universe.is_antisymmetric(set)
    }
}

/// A set of oriented separations, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Orientation {
    picks: Vec<Sep>,
}

impl Orientation {
    pub fn new(picks: impl IntoIterator<Item = Sep>) -> Self {
        let mut picks: Vec<Sep> = picks.into_iter().collect();
        picks.sort_unstable();
        picks.dedup();
        Orientation { picks }
    }

    pub fn picks(&self) -> &[Sep] {
        &self.picks
    }

    pub fn contains(&self, s: Sep) -> bool {
        self.picks.binary_search(&s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    /// `{ s* : s in self }`.
    pub fn inverted(&self, u: &Universe) -> Orientation {
        Orientation::new(self.picks.iter().map(|&s| u.inv(s)))
    }
}
