//! The structural predicates on S-trees, each from its definition.

use serde::Serialize;

use super::{Node, STree};
use crate::error::{Error, Result};
use crate::star::{Star, StarFamily};
use crate::system::SeparationSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TreeReport {
    pub is_stree: bool,
    pub is_over_stars: bool,
    pub is_irredundant: bool,
    pub is_tight: bool,
    pub is_order_respecting: bool,
    pub is_essential: bool,
}

/// Checks the tree shape and the labelling, then computes every flag.
pub fn validate_stree(t: &STree, sys: &SeparationSystem) -> Result<TreeReport> {
    t.check_shape()?;
    for ((u, v), s) in t.oriented_edges() {
        if !sys.contains(s) {
            return Err(Error::AlphaImageOutsideS { u, v, sep: sys.universe().id(s) });
        }
        if t.alpha(v, u) != sys.inv(s) {
            return Err(Error::AlphaNotInvolutive { u, v });
        }
    }
    let u = sys.universe();
    let is_over_stars = t.nodes().all(|n| u.is_star(&t.node_star(n)));
    let is_irredundant = t.nodes().all(|n| {
        let mut labels: Vec<_> = t.neighbours(n).map(|m| t.alpha(m, n)).collect();
        let total = labels.len();
        labels.sort_unstable();
        labels.dedup();
        labels.len() == total
    });
    let is_tight = t.nodes().all(|n| u.is_antisymmetric(&t.node_star(n)));
    let is_order_respecting = order_respecting(t, sys);
    let no_trivial = t.oriented_edges().all(|(_, s)| !sys.is_trivial(s));
    Ok(TreeReport {
        is_stree: true,
        is_over_stars,
        is_irredundant,
        is_tight,
        is_order_respecting,
        is_essential: is_irredundant && is_tight && no_trivial,
    })
}

/// The natural order on oriented edges: `(x,y) < (u,v)` iff the edges
/// differ and the path from `x` to `v` runs through `y` and then `u`.
pub fn natural_lt(t: &STree, e: (Node, Node), f: (Node, Node)) -> bool {
    let (nodes, dist) = t.distances();
    natural_lt_with(&nodes, &dist, e, f)
}

fn natural_lt_with(nodes: &[Node], dist: &[Vec<u32>], (x, y): (Node, Node), (u, v): (Node, Node)) -> bool {
    if (x, y) == (u, v) || (x, y) == (v, u) {
        return false;
    }
    let i = |n: Node| nodes.binary_search(&n).expect("node of the tree");
    let d = |a: Node, b: Node| dist[i(a)][i(b)];
    d(x, u) == d(y, u) + 1 && d(v, y) == d(u, y) + 1
}

fn order_respecting(t: &STree, sys: &SeparationSystem) -> bool {
    let (nodes, dist) = t.distances();
    let edges: Vec<_> = t.oriented_edges().collect();
    edges.iter().all(|&(e, a)| {
        edges
            .iter()
            .all(|&(f, b)| !natural_lt_with(&nodes, &dist, e, f) || sys.leq(a, b))
    })
}

/// The least node whose star is not in `F`.
pub fn node_not_over(t: &STree, family: &StarFamily) -> Option<Node> {
    t.nodes().find(|&n| !family.contains(&Star::new(t.node_star(n))))
}

/// Every node star lies in `F`.
pub fn is_over(t: &STree, family: &StarFamily) -> bool {
    node_not_over(t, family).is_none()
}
