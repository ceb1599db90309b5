//! Shifting S-trees across a separation, and the emulation conditions that
//! keep shifted labels inside `S` and shifted stars inside `F`.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::star::{Star, StarFamily};
use crate::stree::{Node, STree};
use crate::system::SeparationSystem;
use crate::universe::Sep;

fn join(sys: &SeparationSystem, a: Sep, b: Sep) -> Result<Sep> {
    sys.universe().join(a, b).ok_or(Error::NoLattice)
}

/// The shifting map of `r` to `s0`, applied to `target`: the orientation `u`
/// of the target above `r` goes to `u ∨ s0`, its inverse to `(u ∨ s0)*`.
/// `r*` counts as the inverse of `r`, so `r ↦ s0` and `r* ↦ s0*`.
pub fn shift_map(sys: &SeparationSystem, r: Sep, s0: Sep, target: Sep) -> Result<Sep> {
    let r_inv = sys.inv(r);
    let upward = sys.leq(r, target) && target != r_inv;
    let u = if upward { target } else { sys.inv(target) };
    if !sys.leq(r, u) {
        let id = |s| sys.universe().id(s);
        return Err(Error::TargetNotAboveR { target: id(target), r: id(r) });
    }
    let j = join(sys, u, s0)?;
    Ok(if upward { j } else { sys.inv(j) })
}

/// Relabels every edge pointing away from the leaf `x` by joining with
/// `s0`, and its reverse by the inverse of that join.
pub fn shift_stree(t: &STree, sys: &SeparationSystem, x: Node, s0: Sep) -> Result<STree> {
    let y = t.leaf_neighbour(x)?;
    let r = t.alpha(x, y);
    if !sys.leq(r, s0) {
        let id = |s| sys.universe().id(s);
        return Err(Error::TargetNotAboveR { target: id(s0), r: id(r) });
    }
    let mut out = t.clone();
    let mut depth = BTreeMap::from([(x, 0u32)]);
    let mut queue = VecDeque::from([x]);
    while let Some(a) = queue.pop_front() {
        for b in t.neighbours(a) {
            if depth.contains_key(&b) {
                continue;
            }
            depth.insert(b, depth[&a] + 1);
            queue.push_back(b);
            let shifted = join(sys, t.alpha(a, b), s0)?;
            if !sys.contains(shifted) {
                return Err(Error::ShiftLeftS(sys.universe().id(shifted)));
            }
            out.set_alpha(a, b, shifted);
            out.set_alpha(b, a, sys.inv(shifted));
        }
    }
    out.root = Some(x);
    Ok(out)
}

/// Members `s ≥ r` other than `r*`.
fn above(sys: &SeparationSystem, r: Sep) -> impl Iterator<Item = Sep> + '_ {
    let r_inv = sys.inv(r);
    sys.members().iter().copied().filter(move |&s| s != r_inv && sys.leq(r, s))
}

/// The least `s ≥ r`, `s ≠ r*`, in `S` whose join with `s0` leaves `S`;
/// `Some(s0)` itself if `s0 ≱ r`.
pub fn emulation_failure(sys: &SeparationSystem, s0: Sep, r: Sep) -> Option<Sep> {
    if !sys.contains(s0) || !sys.leq(r, s0) {
        return Some(s0);
    }
    above(sys, r).find(|&s| !sys.universe().join(s, s0).is_some_and(|j| sys.contains(j)))
}

/// `s0 ≥ r` and every `s ≥ r` in `S` other than `r*` has `s ∨ s0 ∈ S`.
pub fn emulates(sys: &SeparationSystem, s0: Sep, r: Sep) -> bool {
    emulation_failure(sys, s0, r).is_none()
}

/// Emulation, plus: every star of `F` inside the domain of the shifting map
/// that has an element above `r` shifts to a star of `F`.
pub fn emulates_for_f(sys: &SeparationSystem, family: &StarFamily, s0: Sep, r: Sep) -> bool {
    if !emulates(sys, s0, r) {
        return false;
    }
    let r_inv = sys.inv(r);
    let in_domain = |s: Sep| s != r_inv && sys.contains(s) && (sys.leq(r, s) || sys.leq(r, sys.inv(s)));
    family.iter().all(|sigma| {
        if !sigma.is_subset_of(in_domain) || !sigma.seps().iter().any(|&s| sys.leq(r, s)) {
            return true;
        }
        let image: Result<Vec<Sep>> = sigma.seps().iter().map(|&s| shift_map(sys, r, s0, s)).collect();
        image.is_ok_and(|img| family.contains(&Star::new(img)))
    })
}

/// The least-id `s0` in `S` such that `s0` emulates `r` for `F` and `s0*`
/// emulates `r_prime*` for `F`. Meaningful for `r ≤ r_prime` with `r` and
/// `r_prime*` nontrivial, nondegenerate and not forced.
pub fn find_separator(sys: &SeparationSystem, family: &StarFamily, r: Sep, r_prime: Sep) -> Option<Sep> {
    let rp_inv = sys.inv(r_prime);
    sys.members().iter().copied().find(|&x| {
        sys.leq(r, x)
            && sys.leq(x, r_prime)
            && emulates_for_f(sys, family, x, r)
            && emulates_for_f(sys, family, sys.inv(x), rp_inv)
    })
}
