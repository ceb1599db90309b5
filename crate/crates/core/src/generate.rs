//! Seeded random instances: set systems, star families, graphs and S-trees.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::backends::{build_set_universe, GraphInput, GroundSet, SetSeparation, SetUniverse, DEFAULT_MAX_CLOSURE};
use crate::duality::{shift_map, standardize};
use crate::error::Result;
use crate::star::{Star, StarFamily};
use crate::stree::{Node, STree};
use crate::system::SeparationSystem;
use crate::universe::Sep;

/// A random subset of `0..n` as a mask, each element kept with probability `p`.
fn random_mask(rng: &mut impl Rng, n: usize, p: f64) -> u32 {
    (0..n).filter(|_| rng.gen_bool(p)).fold(0, |m, i| m | 1 << i)
}

/// A random separation of an `n`-set: every point goes to one side, or to
/// both with probability `p_both`.
pub fn random_separation(rng: &mut impl Rng, n: usize, p_both: f64) -> SetSeparation {
    let (mut a, mut b) = (0, 0);
    for i in 0..n {
        if rng.gen_bool(p_both) {
            a |= 1 << i;
            b |= 1 << i;
        } else if rng.gen_bool(0.5) {
            a |= 1 << i;
        } else {
            b |= 1 << i;
        }
    }
    SetSeparation::new(a, b)
}

/// A set universe on `n` points generated by up to `seps` random
/// separations, no two with the same underlying separation.
pub fn random_set_system(rng: &mut impl Rng, n: usize, seps: usize) -> Result<SetUniverse> {
    let mut pool: Vec<SetSeparation> = Vec::new();
    for _ in 0..4 * seps {
        if pool.len() == seps {
            break;
        }
        let s = random_separation(rng, n, 0.25);
        if !pool.contains(&s) && !pool.contains(&s.flip()) {
            pool.push(s);
        }
    }
    build_set_universe(&GroundSet::indexed(n), &pool, DEFAULT_MAX_CLOSURE)
}

/// Up to `count` random stars of size 1 to 3 from the members of `sys`,
/// plus the empty star with probability `p_empty`.
pub fn random_stars(rng: &mut impl Rng, sys: &SeparationSystem, count: usize, p_empty: f64) -> StarFamily {
    let u = sys.universe();
    let pool: Vec<Sep> = sys.members().iter().copied().filter(|&s| !sys.is_degenerate(s)).collect();
    let mut f = StarFamily::new();
    if rng.gen_bool(p_empty) {
        f.insert(Star::empty());
    }
    if pool.is_empty() {
        return f;
    }
    for _ in 0..count {
        let size = rng.gen_range(1..=3usize.min(pool.len()));
        let pick: Vec<Sep> = pool.choose_multiple(rng, size).copied().collect();
        if u.is_star(&pick) {
            f.insert(Star::new(pick));
        }
    }
    f
}

/// `random_stars`, standardized for `sys`.
pub fn random_standard_family(rng: &mut impl Rng, sys: &SeparationSystem, count: usize) -> StarFamily {
    standardize(&random_stars(rng, sys, count, 0.02), sys)
}

/// Adds `f(σ)` for every `σ` in the family and every shift `f` of a member
/// `r` to some `s0 ≥ r` until nothing new appears or `limit` stars exist.
/// Families closed this way make separators easy to find.
pub fn shift_closure(sys: &SeparationSystem, family: &StarFamily, limit: usize) -> StarFamily {
    let u = sys.universe();
    let mut f = family.clone();
    let members = sys.members();
    loop {
        let mut added = false;
        let current: Vec<Star> = f.iter().cloned().collect();
        for sigma in &current {
            for &r in members {
                if !sys.is_nontrivial_separation(r) || sys.is_degenerate(r) || !sigma.seps().iter().any(|&s| sys.leq(r, s)) {
                    continue;
                }
                let r_inv = sys.inv(r);
                let in_domain = |s: Sep| s != r_inv && (sys.leq(r, s) || sys.leq(r, sys.inv(s)));
                if !sigma.is_subset_of(in_domain) {
                    continue;
                }
                for &s0 in members.iter().filter(|&&s0| sys.leq(r, s0)) {
                    let image: Result<Vec<Sep>> = sigma.seps().iter().map(|&s| shift_map(sys, r, s0, s)).collect();
                    let Ok(image) = image else { continue };
                    if image.iter().all(|&s| sys.contains(s)) && u.is_star(&image) && f.insert(Star::new(image)) {
                        added = true;
                        if f.len() >= limit {
                            return f;
                        }
                    }
                }
            }
        }
        if !added {
            return f;
        }
    }
}

/// The demo family for set systems: the singletons `{(V, B)}` of the
/// improper members, standardized. Only meant to give examples an input.
pub fn demo_family(su: &SetUniverse) -> StarFamily {
    let full = su.ground.full();
    let sys = &su.system;
    let f: StarFamily = sys
        .members()
        .iter()
        .copied()
        .filter(|&s| su.sides(s).a == full && !sys.is_degenerate(s))
        .map(Star::singleton)
        .collect();
    standardize(&f, sys)
}

/// A connected random graph on `n` vertices: a random spanning tree plus
/// each other edge with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> GraphInput {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.insert((a, b));
            }
        }
    }
    GraphInput { vertices: (0..n).map(|i| i.to_string()).collect(), edges: edges.into_iter().collect() }
}

/// A random S-tree built like a tree decomposition: nodes carry bags, and
/// the edge `xy` points from the union of the bags on the `x` side to the
/// union on the `y` side. Such trees are over stars. Leaves are sometimes
/// copied onto the same neighbour, which makes them redundant.
#[derive(Clone, Debug)]
pub struct RandomTree {
    pub su: SetUniverse,
    pub tree: STree,
    /// The node stars of `tree` plus a few random stars, standardized.
    pub family: StarFamily,
}

pub fn random_stree(rng: &mut impl Rng, n: usize, nodes: usize) -> Result<RandomTree> {
    let full = (1u32 << n) - 1;
    loop {
        let mut parent: Vec<Option<usize>> = vec![None];
        for i in 1..nodes.max(2) {
            parent.push(Some(rng.gen_range(0..i)));
        }
        let mut bags: Vec<u32> = parent.iter().map(|_| random_mask(rng, n, 0.35)).collect();
        for v in 0..n {
            if !bags.iter().any(|b| b >> v & 1 == 1) {
                let i = rng.gen_range(0..bags.len());
                bags[i] |= 1 << v;
            }
        }
        // copy a few leaves
        let is_leaf = |i: usize, parent: &[Option<usize>]| i > 0 && !parent.contains(&Some(i));
        for _ in 0..rng.gen_range(0..=2) {
            let leaves: Vec<usize> = (0..parent.len()).filter(|&i| is_leaf(i, &parent)).collect();
            if let Some(&x) = leaves.choose(rng) {
                parent.push(parent[x]);
                bags.push(bags[x]);
            }
        }
        let mut t = STree::default();
        t.add_node(0);
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                // labels are filled in below
                t.add_edge(i as Node, p as Node, Sep(0), Sep(0));
            }
        }
        let mut labels = Vec::new();
        for ((x, y), _) in t.oriented_edges().collect::<Vec<_>>() {
            let side = |a: Node, b: Node| t.branch(a, b).iter().fold(0, |m, &i| m | bags[i as usize]);
            let s = SetSeparation::new(side(x, y), side(y, x));
            labels.push(((x, y), s));
        }
        if labels.iter().any(|&(_, s)| s.a == full && s.b == full) {
            continue;
        }
        let mut pool: Vec<SetSeparation> = labels.iter().map(|&(_, s)| s).collect();
        for _ in 0..rng.gen_range(0..=3) {
            pool.push(random_separation(rng, n, 0.25));
        }
        let su = build_set_universe(&GroundSet::indexed(n), &pool, DEFAULT_MAX_CLOSURE)?;
        for &((x, y), s) in &labels {
            t.set_alpha(x, y, su.sep_of(s).expect("label in the universe"));
        }
        let mut family: StarFamily = t.nodes().map(|v| Star::new(t.node_star(v))).collect();
        for star in random_stars(rng, &su.system, 3, 0.0).iter() {
            family.insert(star.clone());
        }
        let family = standardize(&family, &su.system);
        return Ok(RandomTree { su, tree: t, family });
    }
}
