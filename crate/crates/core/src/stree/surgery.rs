//! Minors of S-trees: pruning, contracting, and the rooted combination.

use std::collections::{BTreeSet, VecDeque};

use super::{Node, STree};
use crate::error::{Error, Result};
use crate::system::{Orientation, SeparationSystem};

/// Deletes branches until no node has two neighbours sending it the same
/// label. Among equal-label neighbours the one whose branch holds `root`
/// survives, else the least id.
pub fn prune_to_irredundant(t: &STree, root: Option<Node>) -> STree {
    let mut t = t.clone();
    while let Some((n, group)) = first_redundancy(&t) {
        let keep = root
            .and_then(|x| group.iter().copied().find(|&m| t.branch(m, n).contains(&x)))
            .unwrap_or(group[0]);
        for &m in group.iter().filter(|&&m| m != keep) {
            let doomed = t.branch(m, n);
            t.remove_nodes(&doomed);
        }
    }
    t
}

fn first_redundancy(t: &STree) -> Option<(Node, Vec<Node>)> {
    for n in t.nodes() {
        let nb: Vec<Node> = t.neighbours(n).collect();
        for (i, &a) in nb.iter().enumerate() {
            let s = t.alpha(a, n);
            let group: Vec<Node> = std::iter::once(a)
                .chain(nb[i + 1..].iter().copied().filter(|&b| t.alpha(b, n) == s))
                .collect();
            if group.len() > 1 {
                return Some((n, group));
            }
        }
    }
    None
}

/// Repeatedly takes the least node `t` with neighbours `t'`, `t''` such that
/// `alpha(t',t) = alpha(t,t'')`, deletes the component of `T - t't - tt''`
/// containing `t`, and joins `t'` to `t''` with the same label.
pub fn contract_to_tight(t: &STree) -> STree {
    let mut t = t.clone();
    while let Some((n, a, b)) = first_contraction(&t) {
        let s = t.alpha(a, n);
        let s_inv = t.alpha(n, a);
        let middle = component_avoiding(&t, n, &[a, b]);
        t.remove_nodes(&middle);
        t.add_edge(a, b, s, s_inv);
    }
    t
}

fn first_contraction(t: &STree) -> Option<(Node, Node, Node)> {
    for n in t.nodes() {
        for a in t.neighbours(n) {
            let s = t.alpha(a, n);
            if let Some(b) = t.neighbours(n).find(|&b| b != a && t.alpha(n, b) == s) {
                return Some((n, a, b));
            }
        }
    }
    None
}

/// The component of `start` after deleting every edge from `start` to `cut`.
fn component_avoiding(t: &STree, start: Node, cut: &[Node]) -> BTreeSet<Node> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for b in t.neighbours(a) {
            if a == start && cut.contains(&b) {
                continue;
            }
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    seen
}

/// Prunes keeping the leaf `x`, then contracts. With `alpha(x, y) = r`
/// nontrivial and nondegenerate the result still has `x` as a leaf with
/// label `r`, and no other oriented edge carries `r`.
pub fn tighten_rooted(t: &STree, sys: &SeparationSystem, x: Node) -> Result<STree> {
    let y = t.leaf_neighbour(x)?;
    let r = t.alpha(x, y);
    if sys.is_trivial(r) || sys.is_degenerate(r) {
        return Err(Error::RootLabelTrivial(sys.universe().id(r)));
    }
    let mut out = contract_to_tight(&prune_to_irredundant(t, Some(x)));
    let y = out
        .leaf_neighbour(x)
        .map_err(|_| Error::InternalInvariant(format!("root {x} did not survive tightening")))?;
    if out.alpha(x, y) != r {
        return Err(Error::InternalInvariant(format!("root edge of {x} lost its label")));
    }
    let carriers = out.oriented_edges().filter(|&(_, s)| s == r).count();
    if carriers != 1 {
        return Err(Error::InternalInvariant(format!("{carriers} edges carry the root label after tightening")));
    }
    out.root = Some(x);
    Ok(out)
}

/// Walks from the least node along edges `(t, u)` whose label lies in `o`
/// (so that `alpha(u, t)` does not) until every edge at the current node
/// points at it. For a full orientation the result's star lies in `o`.
pub fn find_guided_sink(t: &STree, o: &Orientation) -> Node {
    let mut cur = t.nodes().next().expect("nonempty tree");
    let mut visited = BTreeSet::from([cur]);
    loop {
        match t.neighbours(cur).find(|&m| !o.contains(t.alpha(m, cur))) {
            Some(m) if visited.insert(m) => cur = m,
            _ => return cur,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{build_set_universe, GroundSet, SetSeparation, SetUniverse, DEFAULT_MAX_CLOSURE};
    use crate::star::StarFamily;
    use crate::stree::{is_over, validate_stree};
    use crate::universe::Sep;

    fn all_of(n: usize) -> SetUniverse {
        let g = GroundSet::indexed(n);
        let full = g.full();
        let mut pool = Vec::new();
        for a in 0..=full {
            for b in 0..=full {
                if a | b == full {
                    pool.push(SetSeparation::new(a, b));
                }
            }
        }
        build_set_universe(&g, &pool, DEFAULT_MAX_CLOSURE).unwrap()
    }

    fn sep(su: &SetUniverse, a: u32, b: u32) -> Sep {
        su.sep_of(SetSeparation::new(a, b)).unwrap()
    }

    fn family_of(t: &STree) -> StarFamily {
        t.nodes().map(|n| crate::star::Star::new(t.node_star(n))).collect()
    }

    /// Path x - y - z with `alpha(x,y) = r`, `alpha(y,z) = s`.
    fn path(su: &SetUniverse, r: Sep, s: Sep) -> STree {
        let u = &su.universe;
        let mut t = STree::default();
        t.add_edge(0, 1, r, u.inv(r));
        t.add_edge(1, 2, s, u.inv(s));
        t
    }

    #[test]
    fn irredundant_input_is_a_fixed_point() {
        let su = all_of(3);
        let r = sep(&su, 0b001, 0b110);
        let s = sep(&su, 0b011, 0b100);
        let t = path(&su, r, s);
        assert_eq!(prune_to_irredundant(&t, None), t);
        assert_eq!(contract_to_tight(&t), t);
    }

    #[test]
    fn duplicate_sibling_branch_is_pruned() {
        let su = all_of(3);
        let u = &su.universe;
        let r = sep(&su, 0b001, 0b110);
        let s = sep(&su, 0b011, 0b100);
        let mut t = path(&su, r, s);
        // a second copy of the x-branch at y
        t.add_edge(3, 1, r, u.inv(r));
        let f = family_of(&t);
        let p = prune_to_irredundant(&t, Some(3));
        assert!(p.contains_node(3) && !p.contains_node(0));
        let rep = validate_stree(&p, &su.system).unwrap();
        assert!(rep.is_irredundant && is_over(&p, &f));
        let q = prune_to_irredundant(&t, None);
        assert!(q.contains_node(0) && !q.contains_node(3));
    }

    #[test]
    fn contraction_joins_the_outer_neighbours() {
        let su = all_of(3);
        let u = &su.universe;
        let s = sep(&su, 0b011, 0b110);
        let r = sep(&su, 0b001, 0b111);
        // 0 -s-> 1 -s-> 2, with a pendant leaf 3 at 1
        let mut t = STree::default();
        t.add_edge(0, 1, s, u.inv(s));
        t.add_edge(1, 2, s, u.inv(s));
        t.add_edge(3, 1, r, u.inv(r));
        let c = contract_to_tight(&t);
        assert_eq!(c.nodes().collect::<Vec<_>>(), [0, 2]);
        assert_eq!(c.alpha(0, 2), s);
        assert_eq!(c.alpha(2, 0), u.inv(s));
        assert!(validate_stree(&c, &su.system).unwrap().is_tight);
    }

    #[test]
    fn two_contractions() {
        let su = all_of(3);
        let u = &su.universe;
        let s = sep(&su, 0b011, 0b110);
        let q = sep(&su, 0b001, 0b110);
        let mut t = STree::default();
        t.add_edge(0, 1, q, u.inv(q));
        t.add_edge(1, 2, q, u.inv(q));
        t.add_edge(2, 3, s, u.inv(s));
        t.add_edge(3, 4, s, u.inv(s));
        let c = contract_to_tight(&t);
        assert_eq!(c.edge_count(), 2);
        assert!(validate_stree(&c, &su.system).unwrap().is_tight);
        assert_eq!(c.alpha(0, 2), q);
        assert_eq!(c.alpha(2, 4), s);
    }

    #[test]
    fn tightening_keeps_the_root_and_its_label() {
        let su = all_of(3);
        let u = &su.universe;
        let r = sep(&su, 0b011, 0b110);
        let t = STree::k2(u, r);
        let out = tighten_rooted(&t, &su.system, 0).unwrap();
        assert_eq!(out.alpha(0, 1), r);
        let trivial = sep(&su, 0b000, 0b111);
        assert!(su.system.is_trivial(trivial));
        assert_eq!(
            tighten_rooted(&STree::k2(u, trivial), &su.system, 0),
            Err(Error::RootLabelTrivial(u.id(trivial)))
        );
        assert_eq!(tighten_rooted(&path(&su, r, r), &su.system, 1), Err(Error::NotALeaf(1)));
    }

    #[test]
    fn sinks() {
        let su = all_of(2);
        let u = &su.universe;
        let s = sep(&su, 0b01, 0b10);
        assert_eq!(find_guided_sink(&STree::single(), &Orientation::new([])), 0);
        let t = STree::k2(u, s);
        assert_eq!(find_guided_sink(&t, &Orientation::new([s])), 1);
        assert_eq!(find_guided_sink(&t, &Orientation::new([u.inv(s)])), 0);
    }
}
