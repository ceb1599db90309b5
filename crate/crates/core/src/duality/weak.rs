//! Weak duality: an orientation avoiding `F`, or an S-tree over `F`.

use super::certificate::{require, verify_weak, Certificate};
use super::DualityState;
use crate::error::{Error, Result};
use crate::star::{avoidance_witness, Star, StarFamily};
use crate::stree::{is_over, prune_to_irredundant, Node, STree};
use crate::system::{Orientation, SeparationSystem};
use crate::universe::Sep;

/// Returns exactly one of the two alternatives, re-verified.
pub fn weak_duality(sys: &SeparationSystem, family: &StarFamily) -> Result<Certificate> {
    let u = sys.universe();
    if let Some(bad) = family.first_non_star(u) {
        return Err(Error::FNotStars(u.ids(bad.seps())));
    }
    let f = family.restrict_to(sys);
    let cert = match solve(sys, &f)? {
        Certificate::Tree(t) => Certificate::Tree(prune_to_irredundant(&t, None).compact().0),
        o => o,
    };
    require(verify_weak(sys, &f, &cert)?)?;
    Ok(cert)
}

fn solve(sys: &SeparationSystem, f: &StarFamily) -> Result<Certificate> {
    let u = sys.universe();
    let state = DualityState::new(sys, f);
    if let Some(s) = state.symmetric_pair(sys) {
        return Ok(Certificate::Tree(STree::k2(u, s)));
    }
    let Some(&s0) = state.open.first() else {
        let o = Orientation::new(state.forced_and_degenerate());
        return Ok(match avoidance_witness(o.picks(), f) {
            None => Certificate::Orientation(o),
            Some(sigma) => Certificate::Tree(STree::star(u, sigma.seps())),
        });
    };
    let s0_inv = sys.inv(s0);
    let t1 = match branch(sys, f, s0)? {
        Ok(t) => t,
        Err(done) => return Ok(done),
    };
    let t2 = match branch(sys, f, s0_inv)? {
        Ok(t) => t,
        Err(done) => return Ok(done),
    };
    // the side whose leaf label is nontrivial has a unique such leaf
    let (a, b, c) = if sys.is_trivial(s0_inv) { (t2, t1, s0_inv) } else { (t1, t2, s0) };
    Ok(Certificate::Tree(splice(sys, &a, &b, c)?))
}

/// Solves for `F ∪ {{c}}`. `Err` carries a certificate that already settles
/// `F`; `Ok` is a pruned tree whose nodes outside `F` are leaves with star `{c}`.
fn branch(sys: &SeparationSystem, f: &StarFamily, c: Sep) -> Result<std::result::Result<STree, Certificate>> {
    let fi = f.with(Star::singleton(c));
    match solve(sys, &fi)? {
        Certificate::Tree(t) if !is_over(&t, f) => {
            let t = prune_to_irredundant(&t, None);
            if is_over(&t, f) {
                Ok(Err(Certificate::Tree(t)))
            } else {
                Ok(Ok(t))
            }
        }
        done => Ok(Err(done)),
    }
}

/// Replaces each leaf of `b` with star `{c*}` by a copy of `a` minus its
/// unique leaf with star `{c}`.
fn splice(sys: &SeparationSystem, a: &STree, b: &STree, c: Sep) -> Result<STree> {
    let c_inv = sys.inv(c);
    let xa = match a.leaves_with_star(c)[..] {
        [x] => x,
        ref v => return Err(Error::InternalInvariant(format!("{} leaves carry the splice star", v.len()))),
    };
    let ya = a.leaf_neighbour(xa)?;
    let mut a_minus = a.clone();
    a_minus.remove_nodes(&[xa].into());
    let targets: Vec<(Node, Node)> = b
        .leaves_with_star(c_inv)
        .into_iter()
        .map(|x| b.leaf_neighbour(x).map(|y| (x, y)))
        .collect::<Result<_>>()?;
    let mut out = b.clone();
    out.remove_nodes(&targets.iter().map(|&(x, _)| x).collect());
    out.root = None;
    for &(_, yb) in &targets {
        let map = out.absorb(&a_minus);
        out.add_edge(map[&ya], yb, c, c_inv);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{build_set_universe, GroundSet, SetSeparation, SetUniverse, DEFAULT_MAX_CLOSURE};
    use crate::duality::verify_weak;

    fn bipartitions(n: usize) -> SetUniverse {
        let g = GroundSet::indexed(n);
        let full = g.full();
        let pool: Vec<_> = (0..=full).map(|a| SetSeparation::new(a, full & !a)).collect();
        build_set_universe(&g, &pool, DEFAULT_MAX_CLOSURE).unwrap()
    }

    fn sep(su: &SetUniverse, a: u32, b: u32) -> Sep {
        su.sep_of(SetSeparation::new(a, b)).unwrap()
    }

    #[test]
    fn both_singletons_give_k2() {
        let su = bipartitions(3);
        let sys = &su.system;
        let s = sep(&su, 0b001, 0b110);
        let f: StarFamily = [Star::singleton(s), Star::singleton(sys.inv(s))].into_iter().collect();
        let cert = weak_duality(sys, &f).unwrap();
        let t = cert.tree().unwrap();
        assert_eq!(t.node_count(), 2);
    }

    #[test]
    fn empty_family_gives_an_orientation() {
        let su = bipartitions(3);
        let cert = weak_duality(&su.system, &StarFamily::new()).unwrap();
        assert!(su.system.is_orientation(cert.orientation().unwrap().picks()));
    }

    #[test]
    fn empty_star_gives_the_single_node() {
        let su = bipartitions(2);
        let f = StarFamily::new().with(Star::empty());
        let t = weak_duality(&su.system, &f).unwrap().tree().unwrap().clone();
        assert_eq!(t.node_count(), 1);
    }

    #[test]
    fn non_stars_are_rejected() {
        let su = bipartitions(3);
        let a = sep(&su, 0b001, 0b110);
        let b = sep(&su, 0b011, 0b100);
        // a <= b, so {a*, b} is not a star
        let f = StarFamily::new().with(Star::new([su.universe.inv(a), b]));
        assert!(matches!(weak_duality(&su.system, &f), Err(Error::FNotStars(_))));
    }

    #[test]
    fn all_small_singletons_force_a_tree() {
        // every separation of the form (A, V \ A) with |A| <= 1 points both ways
        let su = bipartitions(3);
        let sys = &su.system;
        let f: StarFamily = sys
            .members()
            .iter()
            .filter(|&&s| su.sides(s).a.count_ones() <= 1)
            .map(|&s| Star::singleton(s))
            .collect();
        let cert = weak_duality(sys, &f).unwrap();
        assert!(verify_weak(sys, &f, &cert).unwrap().all_passed());
    }

    #[test]
    fn trivial_splice_copies_the_small_side() {
        let g = GroundSet::indexed(3);
        // chain 0 < 01, plus the trivial (0, V)
        let pool = [SetSeparation::new(0b001, 0b110), SetSeparation::new(0b011, 0b100), SetSeparation::new(0b000, 0b111)];
        let su = build_set_universe(&g, &pool, DEFAULT_MAX_CLOSURE).unwrap();
        let sys = &su.system;
        let members: Vec<Star> = sys.members().iter().map(|&s| Star::singleton(s)).collect();
        for mask in 0u32..(1 << members.len()) {
            let f: StarFamily = members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| s.clone()).collect();
            let cert = weak_duality(sys, &f).unwrap();
            assert!(verify_weak(sys, &f, &cert).unwrap().all_passed());
        }
    }
}
