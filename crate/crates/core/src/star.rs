//! Explicit finite families of stars.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::system::SeparationSystem;
use crate::universe::{Sep, Universe};

/// A canonical (sorted, deduplicated) set of oriented separations.
///
/// Canonical order compares by size first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Star(Vec<Sep>);

impl Star {
    pub fn new(seps: impl IntoIterator<Item = Sep>) -> Self {
        let mut v: Vec<Sep> = seps.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Star(v)
    }

    pub fn empty() -> Self {
        Star(Vec::new())
    }

    pub fn singleton(s: Sep) -> Self {
        Star(vec![s])
    }

    pub fn seps(&self) -> &[Sep] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: Sep) -> bool {
        self.0.binary_search(&s).is_ok()
    }

    pub fn is_subset_of(&self, mut has: impl FnMut(Sep) -> bool) -> bool {
        self.0.iter().all(|&s| has(s))
    }
}

impl Ord for Star {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Star {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite family `F` of stars, queried by exact membership.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StarFamily {
    stars: BTreeSet<Star>,
}

impl StarFamily {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a family, rejecting members that are not stars of `u`.
    pub fn from_stars(u: &Universe, stars: impl IntoIterator<Item = Star>) -> Result<Self> {
        let mut family = StarFamily::new();
        for s in stars {
            if !u.is_star(s.seps()) {
                return Err(Error::FNotStars(u.ids(s.seps())));
            }
            family.stars.insert(s);
        }
        Ok(family)
    }

    pub fn insert(&mut self, star: Star) -> bool {
        self.stars.insert(star)
    }

    pub fn with(&self, star: Star) -> StarFamily {
        let mut f = self.clone();
        f.insert(star);
        f
    }

    pub fn contains(&self, star: &Star) -> bool {
        self.stars.contains(star)
    }

    pub fn contains_singleton(&self, s: Sep) -> bool {
        self.stars.contains(&Star::singleton(s))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Star> {
        self.stars.iter()
    }

    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    /// Whether every member is a star of `u`; the first offender otherwise.
    pub fn first_non_star(&self, u: &Universe) -> Option<&Star> {
        self.stars.iter().find(|s| !u.is_star(s.seps()))
    }

    /// `F ∩ 2^S`.
    pub fn restrict_to(&self, sys: &SeparationSystem) -> StarFamily {
        StarFamily {
            stars: self.stars.iter().filter(|s| s.is_subset_of(|x| sys.contains(x))).cloned().collect(),
        }
    }

    /// The separations `F` forces, `{ s : {s*} ∈ F }`, restricted to `sys`.
    pub fn forced(&self, sys: &SeparationSystem) -> Vec<Sep> {
        let mut out: Vec<Sep> = self
            .stars
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| sys.inv(s.seps()[0]))
            .filter(|&s| sys.contains(s))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn forces(&self, sys: &SeparationSystem, s: Sep) -> bool {
        self.contains_singleton(sys.inv(s))
    }

    /// The members contained in the set described by `has`, least first.
    pub fn subsets_of<'a>(&'a self, has: impl Fn(Sep) -> bool + 'a) -> impl Iterator<Item = &'a Star> + 'a {
        self.stars.iter().filter(move |s| s.is_subset_of(&has))
    }
}

impl FromIterator<Star> for StarFamily {
    fn from_iter<I: IntoIterator<Item = Star>>(iter: I) -> Self {
        StarFamily { stars: iter.into_iter().collect() }
    }
}

/// Whether the partial orientation contains no member of `F`.
pub fn avoids(picks: &[Sep], family: &StarFamily) -> bool {
    avoidance_witness(picks, family).is_none()
}

/// The least member of `F` contained in `picks`.
pub fn avoidance_witness<'a>(picks: &[Sep], family: &'a StarFamily) -> Option<&'a Star> {
    let mut sorted = picks.to_vec();
    sorted.sort_unstable();
    family.subsets_of(move |x| sorted.binary_search(&x).is_ok()).next()
}
