//! Checks shared by the integration tests, written from the definitions
//! and not from the library's own predicates.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use tangleduct::duality::{emulates_for_f, shift_map, shift_stree, ShiftRecord};
use tangleduct::generate::RandomTree;
use tangleduct::star::{Star, StarFamily};
use tangleduct::stree::{prune_to_irredundant, tighten_rooted, validate_stree, Node, STree};
use tangleduct::system::SeparationSystem;

pub type Check = Result<(), String>;

pub fn distances(t: &STree, from: Node) -> BTreeMap<Node, usize> {
    let mut d = BTreeMap::from([(from, 0)]);
    let mut q = VecDeque::from([from]);
    while let Some(a) = q.pop_front() {
        for b in t.neighbours(a) {
            if !d.contains_key(&b) {
                d.insert(b, d[&a] + 1);
                q.push_back(b);
            }
        }
    }
    d
}

/// All pairs `e < f` of oriented edges of distinct edges in the natural order.
pub fn natural_pairs(t: &STree) -> Vec<((Node, Node), (Node, Node))> {
    let dist: BTreeMap<Node, BTreeMap<Node, usize>> = t.nodes().map(|n| (n, distances(t, n))).collect();
    let arrows: Vec<(Node, Node)> = t.oriented_edges().map(|(e, _)| e).collect();
    let mut out = Vec::new();
    for &(x, y) in &arrows {
        for &(u, v) in &arrows {
            let same_edge = (x, y) == (u, v) || (x, y) == (v, u);
            if !same_edge && dist[&x][&u] == dist[&y][&u] + 1 && dist[&v][&y] == dist[&u][&y] + 1 {
                out.push(((x, y), (u, v)));
            }
        }
    }
    out
}

pub fn order_respecting(t: &STree, sys: &SeparationSystem) -> bool {
    natural_pairs(t).iter().all(|&((x, y), (u, v))| sys.leq(t.alpha(x, y), t.alpha(u, v)))
}

pub fn irredundant(t: &STree) -> bool {
    t.nodes().all(|n| {
        let labels: Vec<_> = t.neighbours(n).map(|m| t.alpha(m, n)).collect();
        labels.iter().enumerate().all(|(i, s)| !labels[i + 1..].contains(s))
    })
}

pub fn over(t: &STree, f: &StarFamily) -> bool {
    t.nodes().all(|n| f.contains(&Star::new(t.node_star(n))))
}

fn ensure(ok: bool, what: &str) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

/// `sub` is a subtree of `t` carrying the same labels.
fn is_restriction(sub: &STree, t: &STree) -> bool {
    sub.nodes().all(|n| t.contains_node(n)) && sub.oriented_edges().all(|((a, b), s)| t.try_alpha(a, b) == Some(s))
}

/// The four tree lemmas on an S-tree over the star family of `rt`.
pub fn tree_lemmas(rt: &RandomTree) -> Check {
    let sys = &rt.su.system;
    let f = &rt.family;
    let p = prune_to_irredundant(&rt.tree, None);
    ensure(is_restriction(&p, &rt.tree), "prune: not a subtree")?;
    ensure(irredundant(&p) && over(&p, f), "prune: not irredundant over F")?;
    ensure(order_respecting(&p, sys), "irredundant tree over stars is not order-respecting")?;
    for ((e, g), r) in natural_pairs(&p).iter().map(|&(e, g)| ((e, g), p.alpha(e.0, e.1))) {
        if p.alpha(g.1, g.0) == r && !sys.is_trivial(r) {
            return Err(format!("edges {e:?} < {g:?} share a nontrivial label"));
        }
    }
    for x in rt.tree.leaves().collect::<Vec<_>>() {
        let y = rt.tree.leaf_neighbour(x).map_err(|e| e.to_string())?;
        let r = rt.tree.alpha(x, y);
        let kept = prune_to_irredundant(&rt.tree, Some(x));
        ensure(kept.contains_node(x) && kept.has_edge(x, y), "rooted prune lost the root edge")?;
        if sys.is_trivial(r) || sys.is_degenerate(r) {
            continue;
        }
        let tight = tighten_rooted(&rt.tree, sys, x).map_err(|e| e.to_string())?;
        let rep = validate_stree(&tight, sys).map_err(|e| e.to_string())?;
        ensure(rep.is_tight && irredundant(&tight) && over(&tight, f), "tightened tree is not tight and irredundant over F")?;
        let carriers = tight.oriented_edges().filter(|&(_, s)| s == r).count();
        let root_edge = tight.leaf_neighbour(x).map(|y| tight.alpha(x, y));
        ensure(carriers == 1 && root_edge == Ok(r), "root label is not carried by the root edge alone")?;
    }
    Ok(())
}

/// The conclusions of the shifting lemma, and the edgewise formula for
/// every edge pointing away from the root.
pub fn shift_lemma(sys: &SeparationSystem, rec: &ShiftRecord) -> Check {
    let (t, a, x) = (&rec.before, &rec.after, rec.root);
    let target = Star::singleton(sys.inv(rec.s0));
    let f = rec.family.with(target.clone());
    ensure(over(a, &f), "shifted tree is not over F + {s0*}")?;
    for n in a.nodes() {
        if Star::new(a.node_star(n)) == target && n != x {
            return Err(format!("node {n} besides the root has star {{s0*}}"));
        }
    }
    ensure(Star::new(a.node_star(x)) == target, "the root is not associated with {s0*}")?;
    ensure(order_respecting(a, sys), "shifted tree is not order-respecting")?;
    let dist = distances(t, x);
    for ((u, v), s) in t.oriented_edges() {
        if dist[&v] == dist[&u] + 1 {
            let want = shift_map(sys, rec.r, rec.s0, s).map_err(|e| e.to_string())?;
            ensure(a.alpha(u, v) == want && a.alpha(v, u) == sys.inv(want), "edgewise shift formula fails")?;
        }
    }
    Ok(())
}

/// A shift of a tightened random tree at a random leaf, by a random `s0`
/// that emulates the root label for the tree's family. `None` when no leaf
/// has a nontrivial label.
pub fn constructed_shift(rng: &mut impl Rng, rt: &RandomTree) -> Option<Result<ShiftRecord, String>> {
    let sys = &rt.su.system;
    let mut leaves: Vec<Node> = rt.tree.leaves().collect();
    leaves.shuffle(rng);
    for x in leaves {
        let y = rt.tree.leaf_neighbour(x).ok()?;
        let r = rt.tree.alpha(x, y);
        if sys.is_trivial(r) || sys.is_degenerate(r) {
            continue;
        }
        let before = match tighten_rooted(&rt.tree, sys, x) {
            Ok(t) => t,
            Err(e) => return Some(Err(e.to_string())),
        };
        let mut options: Vec<_> =
            sys.members().iter().copied().filter(|&s0| s0 != r && sys.leq(r, s0) && emulates_for_f(sys, &rt.family, s0, r)).collect();
        if options.is_empty() {
            options.push(r);
        }
        let s0 = *options.choose(rng)?;
        return Some(
            shift_stree(&before, sys, x, s0)
                .map(|after| ShiftRecord { before, root: x, r, s0, after, family: rt.family.clone() })
                .map_err(|e| e.to_string()),
        );
    }
    None
}
