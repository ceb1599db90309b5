//! Strong duality: an F-tangle, or an S-tree over `F`, for standard `F`
//! and an `F`-separable system.

use super::certificate::{require, verify_strong, Certificate};
use super::shift::{find_separator, shift_stree};
use super::{first_unforced_trivial, standardize, DualityState};
use crate::error::{Error, Result};
use crate::star::{avoidance_witness, Star, StarFamily};
use crate::stree::{is_over, prune_to_irredundant, tighten_rooted, validate_stree, Node, STree};
use crate::system::{Orientation, SeparationSystem};
use crate::universe::Sep;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StrongOptions {
    /// Add the missing cotrivial singletons instead of failing with `FNotStandard`.
    pub auto_standardize: bool,
}

/// One shift performed by the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRecord {
    /// The tight, irredundant tree before shifting.
    pub before: STree,
    pub root: Node,
    pub r: Sep,
    pub s0: Sep,
    pub after: STree,
    /// The family `s0` emulates `r` for.
    pub family: StarFamily,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongRun {
    pub certificate: Certificate,
    /// The family the certificate refers to: `F ∩ 2^S`, standardized if asked.
    pub family: StarFamily,
    pub trace: Vec<ShiftRecord>,
}

pub fn strong_duality(sys: &SeparationSystem, family: &StarFamily, opts: StrongOptions) -> Result<StrongRun> {
    let u = sys.universe();
    if let Some(bad) = family.first_non_star(u) {
        return Err(Error::FNotStars(u.ids(bad.seps())));
    }
    let mut f = family.restrict_to(sys);
    if let Some(r) = first_unforced_trivial(&f, sys) {
        if !opts.auto_standardize {
            return Err(Error::FNotStandard(u.id(r)));
        }
        f = standardize(&f, sys);
    }
    if !u.has_lattice() {
        return Err(Error::NoLattice);
    }
    let mut trace = Vec::new();
    let certificate = match solve(sys, &f, &mut trace)? {
        Certificate::Tree(t) => Certificate::Tree(prune_to_irredundant(&t, None).compact().0),
        o => o,
    };
    require(verify_strong(sys, &f, &certificate)?)?;
    Ok(StrongRun { certificate, family: f, trace })
}

fn solve(sys: &SeparationSystem, f: &StarFamily, trace: &mut Vec<ShiftRecord>) -> Result<Certificate> {
    let u = sys.universe();
    let id = |s| u.id(s);
    let state = DualityState::new(sys, f);
    if let Some(s) = state.symmetric_pair(sys) {
        return Ok(Certificate::Tree(STree::k2(u, s)));
    }
    let fixed = state.forced_and_degenerate();
    if let Some((a, b)) = sys.consistency_violation(&fixed) {
        if !state.forced(a) || !state.forced(b) {
            return Err(Error::InternalInvariant("a degenerate separation breaks consistency".into()));
        }
        return Err(match find_separator(sys, f, sys.inv(a), b) {
            None => Error::NotFSeparable { r: id(sys.inv(a)), r_prime: id(b) },
            Some(_) => Error::InternalInvariant("forced separations are inconsistent".into()),
        });
    }
    let Some(&r0) = state.open.first() else {
        let o = Orientation::new(fixed);
        return Ok(match avoidance_witness(o.picks(), f) {
            None => Certificate::Orientation(o),
            Some(sigma) => Certificate::Tree(STree::star(u, sigma.seps())),
        });
    };
    let r1 = least_minimal_below(sys, &fixed, r0);
    let m = least_minimal_below(sys, &fixed, sys.inv(r0));
    let r2 = sys.inv(m);
    let s0 = find_separator(sys, f, r1, r2).ok_or(Error::NotFSeparable { r: id(r1), r_prime: id(r2) })?;
    let s0_inv = sys.inv(s0);

    let sides = [(r1, s0), (m, s0_inv)];
    let order = if state.forced(s0_inv) { [1, 0] } else { [0, 1] };
    let mut shifted = [None, None];
    for i in order {
        let (rr, sh) = sides[i];
        match side(sys, f, rr, sh, trace)? {
            Ok(t) => shifted[i] = Some(t),
            Err(done) => return Ok(done),
        }
    }
    let [Some((t1, x1)), Some((t2, x2))] = shifted else {
        unreachable!("both sides ran");
    };
    let y1 = t1.leaf_neighbour(x1)?;
    let y2 = t2.leaf_neighbour(x2)?;
    let mut out = t2;
    out.remove_nodes(&[x2].into());
    out.root = None;
    let mut t1 = t1;
    t1.remove_nodes(&[x1].into());
    let map = out.absorb(&t1);
    out.add_edge(y2, map[&y1], s0, s0_inv);
    Ok(Certificate::Tree(out))
}

/// The least-id element of `S \ fixed` below `r` that is minimal there.
fn least_minimal_below(sys: &SeparationSystem, fixed: &[Sep], r: Sep) -> Sep {
    let free = |s: Sep| fixed.binary_search(&s).is_err();
    let candidates: Vec<Sep> = sys.members().iter().copied().filter(|&s| free(s) && sys.leq(s, r)).collect();
    candidates
        .iter()
        .copied()
        .find(|&s| !candidates.iter().any(|&t| sys.lt(t, s)))
        .expect("r itself is a candidate")
}

/// Solves for `F ∪ {{rr*}}`, then tightens at a leaf with star `{rr*}` and
/// shifts it by `sh`. `Err` carries a certificate settling `F`; `Ok` holds
/// a tree over `F ∪ {{sh*}}` and its root leaf.
fn side(
    sys: &SeparationSystem,
    f: &StarFamily,
    rr: Sep,
    sh: Sep,
    trace: &mut Vec<ShiftRecord>,
) -> Result<std::result::Result<(STree, Node), Certificate>> {
    let rr_inv = sys.inv(rr);
    let fi = f.with(Star::singleton(rr_inv));
    let t = match solve(sys, &fi, trace)? {
        Certificate::Tree(t) if !is_over(&t, f) => prune_to_irredundant(&t, None),
        done => return Ok(Err(done)),
    };
    if is_over(&t, f) {
        return Ok(Err(Certificate::Tree(t)));
    }
    let x = *t
        .leaves_with_star(rr_inv)
        .first()
        .ok_or_else(|| Error::InternalInvariant("no leaf carries the new singleton".into()))?;
    let tight = tighten_rooted(&t, sys, x)?;
    let after = shift_stree(&tight, sys, x, sh)?;
    check_shift(sys, f, &after, x, sh)?;
    trace.push(ShiftRecord { before: tight, root: x, r: rr, s0: sh, after: after.clone(), family: f.clone() });
    if f.contains_singleton(sys.inv(sh)) {
        return Ok(Err(Certificate::Tree(after)));
    }
    Ok(Ok((after, x)))
}

/// The shifted tree is order-respecting and over `F ∪ {{sh*}}`, with
/// `{sh*}` at the root leaf only.
fn check_shift(sys: &SeparationSystem, f: &StarFamily, t: &STree, x: Node, sh: Sep) -> Result<()> {
    let report = validate_stree(t, sys)?;
    let target = Star::singleton(sys.inv(sh));
    let ok = report.is_order_respecting
        && t.nodes().all(|n| {
            let star = Star::new(t.node_star(n));
            if star == target {
                n == x
            } else {
                f.contains(&star)
            }
        });
    if ok {
        Ok(())
    } else {
        Err(Error::InternalInvariant("shifted tree breaks the shifting lemma".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{build_set_universe, GroundSet, SetSeparation, SetUniverse, DEFAULT_MAX_CLOSURE};

    fn bipartitions(n: usize) -> SetUniverse {
        let g = GroundSet::indexed(n);
        let full = g.full();
        let pool: Vec<_> = (0..=full).map(|a| SetSeparation::new(a, full & !a)).collect();
        build_set_universe(&g, &pool, DEFAULT_MAX_CLOSURE).unwrap()
    }

    fn sep(su: &SetUniverse, a: u32, b: u32) -> Sep {
        su.sep_of(SetSeparation::new(a, b)).unwrap()
    }

    fn run(su: &SetUniverse, f: &StarFamily) -> Result<StrongRun> {
        strong_duality(&su.system, f, StrongOptions { auto_standardize: true })
    }

    #[test]
    fn standardized_empty_family_has_a_tangle() {
        let su = bipartitions(3);
        let run = run(&su, &StarFamily::new()).unwrap();
        let o = run.certificate.orientation().unwrap();
        for r in su.system.trivial_members() {
            assert!(o.contains(r));
        }
    }

    #[test]
    fn non_standard_family_is_rejected() {
        let su = bipartitions(3);
        let err = strong_duality(&su.system, &StarFamily::new(), StrongOptions::default()).unwrap_err();
        assert!(matches!(err, Error::FNotStandard(_)));
    }

    #[test]
    fn both_singletons_give_k2() {
        let su = bipartitions(3);
        let s = sep(&su, 0b001, 0b110);
        let f: StarFamily = [Star::singleton(s), Star::singleton(su.universe.inv(s))].into_iter().collect();
        let t = run(&su, &f).unwrap().certificate.tree().unwrap().clone();
        assert_eq!(t.node_count(), 2);
    }

    #[test]
    fn pointing_away_from_every_vertex_is_not_separable() {
        // forbid every ({v}, V - v): the forced co-small sides cross
        let su = bipartitions(3);
        let f: StarFamily = (0..3).map(|v| Star::singleton(sep(&su, 1 << v, 0b111 & !(1 << v)))).collect();
        assert!(matches!(run(&su, &f), Err(Error::NotFSeparable { .. })));
    }

    #[test]
    fn shifted_splice_fixture() {
        let su = bipartitions(3);
        let s = |a, b| sep(&su, a, b);
        let f: StarFamily = [
            Star::singleton(s(0b110, 0b001)),
            Star::new([s(0b000, 0b111), s(0b011, 0b100)]),
            Star::new([s(0b000, 0b111), s(0b101, 0b010)]),
            Star::new([s(0b010, 0b101), s(0b100, 0b011)]),
            Star::new([s(0b011, 0b100), s(0b100, 0b011)]),
        ]
        .into_iter()
        .collect();
        let run = run(&su, &f).unwrap();
        let t = run.certificate.tree().unwrap();
        assert!(t.node_count() >= 4);
        assert!(!run.trace.is_empty());
        assert!(verify_strong(&su.system, &run.family, &run.certificate).unwrap().all_passed());
        for rec in &run.trace {
            assert_eq!(rec.after.alpha(rec.root, rec.after.leaf_neighbour(rec.root).unwrap()), rec.s0);
        }
    }
}
