//! Separations `(A, B)` of a finite ground set, with `A ∪ B = V`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::system::SeparationSystem;
use crate::universe::{Lattice, Sep, Universe};

pub const MAX_GROUND_SET: usize = 24;
pub const DEFAULT_MAX_CLOSURE: usize = 4096;

/// Ground set `V`, indexed so subsets fit a `u32` bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge { size: names.len(), cap: MAX_GROUND_SET });
        }
        let unique: HashSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(Error::Parse("duplicate ground set element".into()));
        }
        Ok(GroundSet { names })
    }

    /// `V = {0, .., n-1}`.
    pub fn indexed(n: usize) -> Self {
        GroundSet::new((0..n).map(|i| i.to_string()).collect()).expect("n within cap")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn full(&self) -> u32 {
        if self.names.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.names.len()) - 1
        }
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mask_of<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Result<u32> {
        let mut m = 0;
        for n in names {
            let i = self.position(n).ok_or_else(|| Error::Parse(format!("unknown ground element {n:?}")))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn names_of(&self, mask: u32) -> Vec<&str> {
        (0..self.names.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.names[i].as_str()).collect()
    }
}

/// An oriented separation `(A, B)` of a ground set, sides as bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetSeparation {
    pub a: u32,
    pub b: u32,
}

impl SetSeparation {
    pub fn new(a: u32, b: u32) -> Self {
        SetSeparation { a, b }
    }

    pub fn flip(self) -> Self {
        SetSeparation { a: self.b, b: self.a }
    }

    /// `(A ∪ C, B ∩ D)`
    pub fn join(self, o: Self) -> Self {
        SetSeparation { a: self.a | o.a, b: self.b & o.b }
    }

    /// `(A ∩ C, B ∪ D)`
    pub fn meet(self, o: Self) -> Self {
        SetSeparation { a: self.a & o.a, b: self.b | o.b }
    }

    /// `A ⊆ C` and `B ⊇ D`.
    pub fn leq(self, o: Self) -> bool {
        self.a & !o.a == 0 && o.b & !self.b == 0
    }

    pub fn covers(self, full: u32) -> bool {
        self.a | self.b == full && (self.a | self.b) & !full == 0
    }

    /// `|A ∩ B|`
    pub fn order(self) -> u32 {
        (self.a & self.b).count_ones()
    }
}

impl fmt::Display for SetSeparation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:b}, {:b})", self.a, self.b)
    }
}

/// A join/meet-closed universe of set separations plus the system generated
/// by the user's pool.
#[derive(Clone, Debug)]
pub struct SetUniverse {
    pub ground: GroundSet,
    pub universe: Arc<Universe>,
    /// The pool, closed under flips, as a system inside `universe`.
    pub system: SeparationSystem,
}

impl SetUniverse {
    pub fn sides(&self, s: Sep) -> SetSeparation {
        self.universe.set_sides().expect("set universe")[s.index()]
    }

    pub fn sep_of(&self, sides: SetSeparation) -> Option<Sep> {
        self.universe
            .set_sides()
            .and_then(|all| all.binary_search(&sides).ok())
            .map(|i| Sep(i as u32))
    }

    pub fn describe(&self, s: Sep) -> String {
        let sides = self.sides(s);
        format!(
            "({{{}}}, {{{}}})",
            self.ground.names_of(sides.a).join(","),
            self.ground.names_of(sides.b).join(",")
        )
    }
}

/// Closes `pool` under flips, joins and meets, and materializes the result
/// as a validated universe. Element ids follow the `(A, B)` bitmask order.
pub fn build_set_universe(ground: &GroundSet, pool: &[SetSeparation], max_closure: usize) -> Result<SetUniverse> {
    let full = ground.full();
    for s in pool {
        if !s.covers(full) {
            return Err(Error::NotASeparation {
                a: ground.names_of(s.a).join(","),
                b: ground.names_of(s.b).join(","),
            });
        }
    }
    let mut seen: HashSet<SetSeparation> = HashSet::new();
    let mut list: Vec<SetSeparation> = Vec::new();
    let mut push = |s: SetSeparation, list: &mut Vec<SetSeparation>| -> Result<()> {
        if seen.insert(s) {
            list.push(s);
            if list.len() > max_closure {
                return Err(Error::ClosureTooLarge { cap: max_closure });
            }
        }
        Ok(())
    };
    for &s in pool {
        push(s, &mut list)?;
        push(s.flip(), &mut list)?;
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            let (x, y) = (list[i], list[j]);
            push(x.join(y), &mut list)?;
            push(x.meet(y), &mut list)?;
        }
        i += 1;
    }
    list.sort_unstable();
    let index: HashMap<SetSeparation, Sep> =
        list.iter().enumerate().map(|(i, &s)| (s, Sep(i as u32))).collect();
    let inverse: Vec<Sep> = list.iter().map(|s| index[&s.flip()]).collect();
    let mut leq = Vec::new();
    for (i, x) in list.iter().enumerate() {
        for (j, y) in list.iter().enumerate() {
            if x.leq(*y) {
                leq.push((Sep(i as u32), Sep(j as u32)));
            }
        }
    }
    let members: Vec<Sep> = pool.iter().flat_map(|s| [index[s], index[&s.flip()]]).collect();
    let ids = (0..list.len() as u64).collect();
    let universe = Universe::from_parts(ids, inverse, leq, Some(Lattice::Sets { sides: list, index }));
    universe.check_laws()?;
    let universe = Arc::new(universe);
    let system = SeparationSystem::new(universe.clone(), members)?;
    Ok(SetUniverse { ground: ground.clone(), universe, system })
}
