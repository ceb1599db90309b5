//! Finite universes of oriented separations.
//!
//! A [`Universe`] is a finite poset with an order-reversing involution and,
//! optionally, total join and meet operations. Elements are addressed by
//! [`Sep`] handles, which index the elements in ascending order of their
//! external ids, so "least id" and "least index" coincide.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::backends::SetSeparation;
use crate::error::{Error, Result};

/// Handle to one oriented separation of a universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Sep(pub u32);

impl Sep {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Sep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Unvalidated universe description, as read from JSON.
#[derive(Clone, Debug, Default)]
pub struct RawUniverse {
    pub elements: Vec<u64>,
    pub inverse: Vec<(u64, u64)>,
    /// The full relation, reflexive pairs included.
    pub leq: Vec<(u64, u64)>,
    /// `(a, b, a ∨ b)` triples; one of each unordered pair suffices.
    pub join: Option<Vec<(u64, u64, u64)>>,
    pub meet: Option<Vec<(u64, u64, u64)>>,
}

#[derive(Clone, Debug)]
pub(crate) enum Lattice {
    Table { join: Vec<Sep>, meet: Vec<Sep> },
    Sets { sides: Vec<SetSeparation>, index: HashMap<SetSeparation, Sep> },
}

/// A validated finite universe.
#[derive(Clone, Debug)]
pub struct Universe {
    ids: Vec<u64>,
    by_id: HashMap<u64, Sep>,
    inverse: Vec<Sep>,
    /// `up[a]` holds every `b` with `a <= b`.
    up: Vec<FixedBitSet>,
    /// `down[a]` holds every `b` with `b <= a`.
    down: Vec<FixedBitSet>,
    lattice: Option<Lattice>,
}

impl Universe {
    pub(crate) fn from_parts(
        ids: Vec<u64>,
        inverse: Vec<Sep>,
        leq_pairs: impl IntoIterator<Item = (Sep, Sep)>,
        lattice: Option<Lattice>,
    ) -> Self {
        let n = ids.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in leq_pairs {
            up[a.index()].insert(b.index());
            down[b.index()].insert(a.index());
        }
        let by_id = ids.iter().enumerate().map(|(i, &id)| (id, Sep(i as u32))).collect();
        Universe { ids, by_id, inverse, up, down, lattice }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Sep> + '_ {
        (0..self.ids.len() as u32).map(Sep)
    }

    /// External id of an element.
    pub fn id(&self, s: Sep) -> u64 {
        self.ids[s.index()]
    }

    pub fn ids(&self, seps: &[Sep]) -> Vec<u64> {
        seps.iter().map(|&s| self.id(s)).collect()
    }

    pub fn sep(&self, id: u64) -> Option<Sep> {
        self.by_id.get(&id).copied()
    }

    pub fn sep_checked(&self, id: u64) -> Result<Sep> {
        self.sep(id).ok_or(Error::UnknownId(id))
    }

    #[inline]
    pub fn inv(&self, s: Sep) -> Sep {
        self.inverse[s.index()]
    }

    #[inline]
    pub fn leq(&self, a: Sep, b: Sep) -> bool {
        self.up[a.index()].contains(b.index())
    }

    #[inline]
    pub fn lt(&self, a: Sep, b: Sep) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Sep, b: Sep) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn is_degenerate(&self, s: Sep) -> bool {
        self.inv(s) == s
    }

    /// The representative `min(s, s*)` of the unoriented separation of `s`.
    #[inline]
    pub fn underlying(&self, s: Sep) -> Sep {
        s.min(self.inv(s))
    }

    pub fn up_set(&self, a: Sep) -> &FixedBitSet {
        &self.up[a.index()]
    }

    pub fn down_set(&self, a: Sep) -> &FixedBitSet {
        &self.down[a.index()]
    }

    pub fn has_lattice(&self) -> bool {
        self.lattice.is_some()
    }

    pub(crate) fn set_sides(&self) -> Option<&[SetSeparation]> {
        match &self.lattice {
            Some(Lattice::Sets { sides, .. }) => Some(sides),
            _ => None,
        }
    }

    /// Supremum of `a` and `b`, if the universe carries lattice operations.
    pub fn join(&self, a: Sep, b: Sep) -> Option<Sep> {
        match self.lattice.as_ref()? {
            Lattice::Table { join, .. } => Some(join[a.index() * self.len() + b.index()]),
            Lattice::Sets { sides, index } => {
                index.get(&sides[a.index()].join(sides[b.index()])).copied()
            }
        }
    }

    /// Infimum of `a` and `b`, if the universe carries lattice operations.
    pub fn meet(&self, a: Sep, b: Sep) -> Option<Sep> {
        match self.lattice.as_ref()? {
            Lattice::Table { meet, .. } => Some(meet[a.index() * self.len() + b.index()]),
            Lattice::Sets { sides, index } => {
                index.get(&sides[a.index()].meet(sides[b.index()])).copied()
            }
        }
    }

    /// `s0` is small if `s <= s*`.
    pub fn is_small(&self, s: Sep) -> bool {
        self.leq(s, self.inv(s))
    }

    /// Whether the family (repetitions allowed) is a multistar: all
    /// elements nondegenerate and `s_i <= s_j*` for all distinct indices.
    pub fn is_multistar(&self, family: &[Sep]) -> bool {
        if family.iter().any(|&s| self.is_degenerate(s)) {
            return false;
        }
        for (i, &a) in family.iter().enumerate() {
            for (j, &b) in family.iter().enumerate() {
                if i != j && !self.leq(a, self.inv(b)) {
                    return false;
                }
            }
        }
        true
    }

    /// A star is a multistar without repeated elements.
    pub fn is_star(&self, set: &[Sep]) -> bool {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == set.len() && self.is_multistar(set)
    }

    /// Whether the set never contains both orientations of a nondegenerate
    /// separation.
    pub fn is_antisymmetric(&self, set: &[Sep]) -> bool {
        set.iter().all(|&s| self.is_degenerate(s) || !set.contains(&self.inv(s)))
    }

    /// Exhaustive check of the poset, involution and lattice laws.
    pub fn check_laws(&self) -> Result<()> {
        let n = self.len();
        for a in self.elements() {
            let i = self.inv(a);
            if i.index() >= n || self.inv(i) != a {
                return Err(Error::NotInvolution(self.id(a)));
            }
        }
        for a in self.elements() {
            if !self.leq(a, a) {
                return Err(Error::NotAPartialOrder { reason: "not reflexive", a: self.id(a), b: self.id(a) });
            }
            let mut both = self.up[a.index()].clone();
            both.intersect_with(&self.down[a.index()]);
            if let Some(b) = both.ones().find(|&b| b != a.index()) {
                return Err(Error::NotAPartialOrder {
                    reason: "not antisymmetric",
                    a: self.id(a),
                    b: self.ids[b],
                });
            }
            for b in self.up[a.index()].ones() {
                if !self.up[b].is_subset(&self.up[a.index()]) {
                    let c = self.up[b].difference(&self.up[a.index()]).next().unwrap_or(b);
                    return Err(Error::NotAPartialOrder {
                        reason: "not transitive",
                        a: self.id(a),
                        b: self.ids[c],
                    });
                }
            }
        }
        for a in self.elements() {
            for b in self.up[a.index()].ones() {
                let b = Sep(b as u32);
                if !self.leq(self.inv(b), self.inv(a)) {
                    return Err(Error::InvolutionNotOrderReversing { a: self.id(a), b: self.id(b) });
                }
            }
        }
        if self.lattice.is_some() {
            self.check_lattice()?;
        }
        Ok(())
    }

    fn check_lattice(&self) -> Result<()> {
        let n = self.len();
        let mut bounds = FixedBitSet::with_capacity(n);
        for a in self.elements() {
            for b in (a.0..n as u32).map(Sep) {
                let (Some(j), Some(m)) = (self.join(a, b), self.meet(a, b)) else {
                    return Err(Error::IncompleteTable { table: "join/meet", a: self.id(a), b: self.id(b) });
                };
                bounds.clone_from(&self.up[a.index()]);
                bounds.intersect_with(&self.up[b.index()]);
                if !bounds.contains(j.index()) || !bounds.is_subset(&self.up[j.index()]) {
                    return Err(Error::JoinNotSupremum { a: self.id(a), b: self.id(b), got: self.id(j) });
                }
                bounds.clone_from(&self.down[a.index()]);
                bounds.intersect_with(&self.down[b.index()]);
                if !bounds.contains(m.index()) || !bounds.is_subset(&self.down[m.index()]) {
                    return Err(Error::MeetNotInfimum { a: self.id(a), b: self.id(b), got: self.id(m) });
                }
                if self.join(b, a) != Some(j) || self.meet(b, a) != Some(m) {
                    return Err(Error::ConflictingTable { table: "join/meet", a: self.id(a), b: self.id(b) });
                }
                if self.meet(self.inv(a), self.inv(b)) != Some(self.inv(j)) {
                    return Err(Error::DeMorganFails { a: self.id(a), b: self.id(b) });
                }
            }
        }
        Ok(())
    }
}

/// Validates a raw universe: partial order, involution, order reversal, and
/// (when tables are present or derivable) supremum, infimum and De Morgan.
///
/// When neither table is given, join and meet are derived from the order if
/// every pair has a supremum and an infimum; otherwise the universe carries
/// no lattice operations. A single given table is completed via De Morgan.
pub fn validate_universe(raw: &RawUniverse) -> Result<Universe> {
    if raw.elements.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let mut ids = raw.elements.clone();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateId(w[0]));
    }
    let n = ids.len();
    let index: HashMap<u64, Sep> = ids.iter().enumerate().map(|(i, &id)| (id, Sep(i as u32))).collect();
    let lookup = |id: u64| index.get(&id).copied().ok_or(Error::UnknownId(id));

    let mut inverse_map: BTreeMap<Sep, Sep> = BTreeMap::new();
    for &(a, b) in &raw.inverse {
        let (a, b) = (lookup(a)?, lookup(b)?);
        // a listed pair fixes both directions
        for (x, y) in [(a, b), (b, a)] {
            if inverse_map.insert(x, y).is_some_and(|prev| prev != y) {
                return Err(Error::NotInvolution(ids[x.index()]));
            }
        }
    }
    let mut inverse = Vec::with_capacity(n);
    for (i, &id) in ids.iter().enumerate() {
        match inverse_map.get(&Sep(i as u32)) {
            Some(&b) => inverse.push(b),
            None => return Err(Error::NotInvolution(id)),
        }
    }
    for i in 0..n {
        if inverse[inverse[i].index()] != Sep(i as u32) {
            return Err(Error::NotInvolution(ids[i]));
        }
    }

    let mut pairs = Vec::with_capacity(raw.leq.len());
    for &(a, b) in &raw.leq {
        pairs.push((lookup(a)?, lookup(b)?));
    }
    let mut universe = Universe::from_parts(ids.clone(), inverse, pairs, None);
    let order_only = universe.check_laws();
    order_only?;

    let table = |entries: &Vec<(u64, u64, u64)>, name: &'static str| -> Result<Vec<Sep>> {
        let mut t: Vec<Option<Sep>> = vec![None; n * n];
        for &(a, b, c) in entries {
            let (a, b, c) = (lookup(a)?, lookup(b)?, lookup(c)?);
            for (x, y) in [(a, b), (b, a)] {
                let slot = &mut t[x.index() * n + y.index()];
                if slot.is_some_and(|prev| prev != c) {
                    return Err(Error::ConflictingTable { table: name, a: ids[a.index()], b: ids[b.index()] });
                }
                *slot = Some(c);
            }
        }
        t.iter()
            .enumerate()
            .map(|(k, v)| v.ok_or(Error::IncompleteTable { table: name, a: ids[k / n], b: ids[k % n] }))
            .collect()
    };
    let dual = |t: &[Sep], u: &Universe| -> Vec<Sep> {
        let mut out = vec![Sep(0); n * n];
        for a in 0..n {
            for b in 0..n {
                let (ia, ib) = (u.inverse[a].index(), u.inverse[b].index());
                out[a * n + b] = u.inverse[t[ia * n + ib].index()];
            }
        }
        out
    };
    let lattice = match (&raw.join, &raw.meet) {
        (Some(j), Some(m)) => Some((table(j, "join")?, table(m, "meet")?)),
        (Some(j), None) => {
            let j = table(j, "join")?;
            let m = dual(&j, &universe);
            Some((j, m))
        }
        (None, Some(m)) => {
            let m = table(m, "meet")?;
            let j = dual(&m, &universe);
            Some((j, m))
        }
        (None, None) => derive_lattice(&universe),
    };
    if let Some((join, meet)) = lattice {
        universe.lattice = Some(Lattice::Table { join, meet });
        universe.check_lattice()?;
    }
    Ok(universe)
}

/// Derives join and meet tables from the order when every pair has both.
fn derive_lattice(u: &Universe) -> Option<(Vec<Sep>, Vec<Sep>)> {
    let n = u.len();
    let mut join = vec![Sep(0); n * n];
    let mut meet = vec![Sep(0); n * n];
    let mut bounds = FixedBitSet::with_capacity(n);
    for a in 0..n {
        for b in a..n {
            bounds.clone_from(&u.up[a]);
            bounds.intersect_with(&u.up[b]);
            let j = bounds.ones().find(|&c| bounds.is_subset(&u.up[c]))?;
            bounds.clone_from(&u.down[a]);
            bounds.intersect_with(&u.down[b]);
            let m = bounds.ones().find(|&c| bounds.is_subset(&u.down[c]))?;
            for (x, y) in [(a, b), (b, a)] {
                join[x * n + y] = Sep(j as u32);
                meet[x * n + y] = Sep(m as u32);
            }
        }
    }
    Some((join, meet))
}
