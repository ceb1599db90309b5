//! Essential cores: trivial separations stripped from stars and trees.

use crate::error::{Error, Result};
use crate::star::{Star, StarFamily};
use crate::stree::{contract_to_tight, is_over, node_not_over, prune_to_irredundant, validate_stree, STree};
use crate::system::SeparationSystem;
use crate::universe::Sep;

/// A family with its essential core and the trivial members of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialCore {
    pub base: StarFamily,
    pub core: StarFamily,
    pub trivial: Vec<Sep>,
}

impl EssentialCore {
    pub fn new(family: &StarFamily, sys: &SeparationSystem) -> Self {
        EssentialCore { base: family.clone(), core: essential_core(family, sys), trivial: sys.trivial_members() }
    }
}

/// `{ σ ∖ trivial : σ ∈ F }`.
pub fn essential_core(family: &StarFamily, sys: &SeparationSystem) -> StarFamily {
    family
        .iter()
        .map(|sigma| Star::new(sigma.seps().iter().copied().filter(|&s| !sys.is_trivial(s))))
        .collect()
}

/// Prunes, contracts, then deletes leaves sending a trivial separation
/// until none is left. The result is essential and over the essential
/// core of any star family the input was over.
pub fn essentialize_stree(t: &STree, sys: &SeparationSystem) -> Result<STree> {
    validate_stree(t, sys)?;
    let mut out = contract_to_tight(&prune_to_irredundant(t, None));
    out.root = None;
    loop {
        let doomed = out.leaves().find(|&x| {
            out.leaf_neighbour(x).is_ok_and(|y| sys.is_trivial(out.alpha(x, y)))
        });
        match doomed {
            Some(x) => out.remove_nodes(&[x].into()),
            None => break,
        }
    }
    let report = validate_stree(&out, sys)?;
    if !report.is_essential {
        return Err(Error::InternalInvariant("essentialized tree is not essential".into()));
    }
    Ok(out)
}

/// Attaches, at every node whose star is not in `F`, one leaf per trivial
/// separation missing from the least `σ ∈ F` that projects onto it.
pub fn expand_to_f(t: &STree, family: &StarFamily, sys: &SeparationSystem) -> Result<STree> {
    let u = sys.universe();
    let mut out = t.clone();
    for n in t.nodes() {
        let tau = Star::new(t.node_star(n));
        if family.contains(&tau) {
            continue;
        }
        let sigma = family
            .iter()
            .find(|sigma| {
                tau.is_subset_of(|s| sigma.contains(s))
                    && sigma.seps().iter().all(|&s| tau.contains(s) || sys.is_trivial(s))
            })
            .ok_or(Error::NoMatchingStar(n))?;
        for &s in sigma.seps().iter().filter(|&&s| !tau.contains(s)) {
            let leaf = out.fresh_node();
            out.add_edge(leaf, n, s, u.inv(s));
        }
    }
    if let Some(n) = node_not_over(&out, family) {
        return Err(Error::NoMatchingStar(n));
    }
    Ok(out)
}

/// Whether both trees pass validation and `t` is over `F`.
pub fn round_trips(t: &STree, family: &StarFamily, sys: &SeparationSystem) -> Result<bool> {
    let e = essentialize_stree(t, sys)?;
    let back = expand_to_f(&e, family, sys)?;
    Ok(validate_stree(&back, sys)?.is_stree && is_over(&back, family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{build_set_universe, GroundSet, SetSeparation, SetUniverse, DEFAULT_MAX_CLOSURE};

    fn chain() -> SetUniverse {
        // (∅,V) < ({0},V), both trivial below ({0,1},{0,2}), then ({0,1},{2})
        let g = GroundSet::indexed(3);
        let pool = [
            SetSeparation::new(0b000, 0b111),
            SetSeparation::new(0b001, 0b111),
            SetSeparation::new(0b011, 0b101),
            SetSeparation::new(0b011, 0b100),
        ];
        build_set_universe(&g, &pool, DEFAULT_MAX_CLOSURE).unwrap()
    }

    fn sep(su: &SetUniverse, a: u32, b: u32) -> Sep {
        su.sep_of(SetSeparation::new(a, b)).unwrap()
    }

    fn family_of(t: &STree) -> StarFamily {
        t.nodes().map(|n| Star::new(t.node_star(n))).collect()
    }

    #[test]
    fn core_strips_trivial_members() {
        let su = chain();
        let sys = &su.system;
        let t0 = sep(&su, 0b000, 0b111);
        let t1 = sep(&su, 0b001, 0b111);
        let s = sep(&su, 0b011, 0b100);
        assert!(sys.is_trivial(t0) && sys.is_trivial(t1) && !sys.is_trivial(s));
        let f: StarFamily = [Star::new([t0, s]), Star::singleton(sys.inv(t1)), Star::singleton(s)].into_iter().collect();
        let core = essential_core(&f, sys);
        assert_eq!(core.len(), 2);
        assert!(core.contains(&Star::singleton(s)));
        assert!(core.contains(&Star::singleton(sys.inv(t1))));
        let plain = StarFamily::new().with(Star::singleton(s));
        assert_eq!(essential_core(&plain, sys), plain);
    }

    #[test]
    fn trivial_leaves_go_leaf_first() {
        let su = chain();
        let sys = &su.system;
        let u = &su.universe;
        let t0 = sep(&su, 0b000, 0b111);
        let t1 = sep(&su, 0b001, 0b111);
        let s = sep(&su, 0b011, 0b100);
        // 0 -t0-> 1 -t1-> 2 -s-> 3
        let mut t = STree::default();
        t.add_edge(0, 1, t0, u.inv(t0));
        t.add_edge(1, 2, t1, u.inv(t1));
        t.add_edge(2, 3, s, u.inv(s));
        let f = crate::duality::standardize(&family_of(&t), sys);
        let e = essentialize_stree(&t, sys).unwrap();
        assert_eq!(e.nodes().collect::<Vec<_>>(), [2, 3]);
        assert!(validate_stree(&e, sys).unwrap().is_essential);
        assert!(is_over(&e, &essential_core(&f, sys)));
        let back = expand_to_f(&e, &f, sys).unwrap();
        assert!(is_over(&back, &f));
        assert_eq!(back.node_count(), 3);
        assert!(round_trips(&t, &f, sys).unwrap());
    }

    #[test]
    fn essential_input_is_unchanged() {
        let su = chain();
        let s = sep(&su, 0b011, 0b100);
        let t = STree::k2(&su.universe, s);
        assert_eq!(essentialize_stree(&t, &su.system).unwrap(), t);
        let f = family_of(&t);
        assert_eq!(expand_to_f(&t, &f, &su.system).unwrap(), t);
    }

    #[test]
    fn unmatched_star_is_reported() {
        let su = chain();
        let s = sep(&su, 0b011, 0b100);
        let t = STree::k2(&su.universe, s);
        let f = StarFamily::new().with(Star::singleton(s));
        assert_eq!(expand_to_f(&t, &f, &su.system), Err(Error::NoMatchingStar(0)));
    }
}
