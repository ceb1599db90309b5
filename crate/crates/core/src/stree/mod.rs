//! S-trees: finite trees whose oriented edges are labelled by oriented
//! separations, commuting with the involutions.

mod surgery;
mod validate;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::universe::{Sep, Universe};

pub use surgery::{contract_to_tight, find_guided_sink, prune_to_irredundant, tighten_rooted};
pub use validate::{is_over, natural_lt, node_not_over, validate_stree, TreeReport};

pub type Node = u32;

/// A tree with a labelling `alpha` of its oriented edges.
///
/// Node ids are stable under surgery; removed nodes leave gaps.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct STree {
    adj: BTreeMap<Node, BTreeSet<Node>>,
    alpha: BTreeMap<(Node, Node), Sep>,
    /// Leaf the tree is rooted at, if any; only used for display.
    pub root: Option<Node>,
}

impl STree {
    /// The single-node tree on node 0.
    pub fn single() -> Self {
        let mut t = STree::default();
        t.add_node(0);
        t
    }

    /// `x = 0`, `y = 1`, `alpha(x, y) = s`.
    pub fn k2(u: &Universe, s: Sep) -> Self {
        let mut t = STree::default();
        t.add_edge(0, 1, s, u.inv(s));
        t
    }

    /// A centre 0 with one leaf per element of `sigma`, the leaf edge
    /// pointing at the centre labelled by that element. The star at the
    /// centre is `sigma`; the leaf stars are `{s*}`.
    pub fn star(u: &Universe, sigma: &[Sep]) -> Self {
        let mut t = STree::single();
        for (i, &s) in sigma.iter().enumerate() {
            t.add_edge(i as Node + 1, 0, s, u.inv(s));
        }
        t
    }

    pub fn add_node(&mut self, t: Node) {
        self.adj.entry(t).or_default();
    }

    /// Adds the edge `uv` with `alpha(u, v) = a_uv` and `alpha(v, u) = a_vu`.
    pub fn add_edge(&mut self, u: Node, v: Node, a_uv: Sep, a_vu: Sep) {
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        self.alpha.insert((u, v), a_uv);
        self.alpha.insert((v, u), a_vu);
    }

    pub fn remove_edge(&mut self, u: Node, v: Node) {
        if let Some(n) = self.adj.get_mut(&u) {
            n.remove(&v);
        }
        if let Some(n) = self.adj.get_mut(&v) {
            n.remove(&u);
        }
        self.alpha.remove(&(u, v));
        self.alpha.remove(&(v, u));
    }

    /// Removes nodes and their incident edges.
    pub fn remove_nodes(&mut self, nodes: &BTreeSet<Node>) {
        for &t in nodes {
            if let Some(nb) = self.adj.remove(&t) {
                for u in nb {
                    if let Some(n) = self.adj.get_mut(&u) {
                        n.remove(&t);
                    }
                    self.alpha.remove(&(t, u));
                    self.alpha.remove(&(u, t));
                }
            }
        }
        if self.root.is_some_and(|r| nodes.contains(&r)) {
            self.root = None;
        }
    }

    pub fn contains_node(&self, t: Node) -> bool {
        self.adj.contains_key(&t)
    }

    pub fn has_edge(&self, u: Node, v: Node) -> bool {
        self.alpha.contains_key(&(u, v))
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.adj.keys().copied()
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Undirected edge count.
    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    /// Edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.alpha.keys().copied().filter(|&(u, v)| u < v)
    }

    /// Oriented edges with their labels.
    pub fn oriented_edges(&self) -> impl Iterator<Item = ((Node, Node), Sep)> + '_ {
        self.alpha.iter().map(|(&e, &s)| (e, s))
    }

    pub fn alpha(&self, u: Node, v: Node) -> Sep {
        self.alpha[&(u, v)]
    }

    pub fn try_alpha(&self, u: Node, v: Node) -> Option<Sep> {
        self.alpha.get(&(u, v)).copied()
    }

    pub fn set_alpha(&mut self, u: Node, v: Node, s: Sep) {
        self.alpha.insert((u, v), s);
    }

    pub fn neighbours(&self, t: Node) -> impl Iterator<Item = Node> + '_ {
        self.adj.get(&t).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn degree(&self, t: Node) -> usize {
        self.adj.get(&t).map_or(0, |n| n.len())
    }

    pub fn is_leaf(&self, t: Node) -> bool {
        self.degree(t) == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = Node> + '_ {
        self.adj.iter().filter(|(_, n)| n.len() == 1).map(|(&t, _)| t)
    }

    /// The unique neighbour of a leaf.
    pub fn leaf_neighbour(&self, x: Node) -> Result<Node> {
        match self.adj.get(&x) {
            Some(n) if n.len() == 1 => Ok(*n.iter().next().unwrap()),
            _ => Err(Error::NotALeaf(x)),
        }
    }

    /// `alpha` of the oriented star at `t`: labels of edges pointing at `t`,
    /// as a sorted set.
    pub fn node_star(&self, t: Node) -> Vec<Sep> {
        let mut v: Vec<Sep> = self.neighbours(t).map(|u| self.alpha(u, t)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Leaves whose star is `{s}`, ascending.
    pub fn leaves_with_star(&self, s: Sep) -> Vec<Node> {
        self.leaves().filter(|&x| self.node_star(x) == [s]).collect()
    }

    pub fn fresh_node(&self) -> Node {
        self.adj.keys().next_back().map_or(0, |&m| m + 1)
    }

    /// Nodes of the component of `T - tu` containing `t` (`u` a neighbour).
    pub fn branch(&self, t: Node, away_from: Node) -> BTreeSet<Node> {
        let mut seen = BTreeSet::from([t]);
        let mut queue = VecDeque::from([t]);
        while let Some(a) = queue.pop_front() {
            for b in self.neighbours(a) {
                if !(a == t && b == away_from) && seen.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    /// Whether the graph is connected with one edge fewer than nodes, and
    /// `alpha` is defined on exactly both orientations of every edge.
    pub fn check_shape(&self) -> Result<()> {
        if self.adj.is_empty() {
            return Err(Error::NotATree("no nodes".into()));
        }
        for (&u, nb) in &self.adj {
            for &v in nb {
                if u == v {
                    return Err(Error::NotATree(format!("loop at {u}")));
                }
                if !self.adj.get(&v).is_some_and(|n| n.contains(&u)) || !self.alpha.contains_key(&(u, v)) {
                    return Err(Error::NotATree(format!("edge {u}-{v} is not symmetric or unlabelled")));
                }
            }
        }
        if let Some(&(u, v)) = self.alpha.keys().find(|(u, v)| !self.adj.get(u).is_some_and(|n| n.contains(v))) {
            return Err(Error::NotATree(format!("label on non-edge {u}->{v}")));
        }
        if self.edge_count() + 1 != self.node_count() {
            return Err(Error::NotATree(format!("{} nodes but {} edges", self.node_count(), self.edge_count())));
        }
        let first = *self.adj.keys().next().unwrap();
        let mut seen = BTreeSet::from([first]);
        let mut queue = VecDeque::from([first]);
        while let Some(a) = queue.pop_front() {
            for b in self.neighbours(a) {
                if seen.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        if seen.len() != self.node_count() {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(())
    }

    /// Distances between all pairs of nodes, keyed by dense node index.
    pub(crate) fn distances(&self) -> (Vec<Node>, Vec<Vec<u32>>) {
        let nodes: Vec<Node> = self.nodes().collect();
        let index: BTreeMap<Node, usize> = nodes.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let n = nodes.len();
        let mut dist = vec![vec![u32::MAX; n]; n];
        for (i, &s) in nodes.iter().enumerate() {
            dist[i][i] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(a) = queue.pop_front() {
                let da = dist[i][index[&a]];
                for b in self.neighbours(a) {
                    let j = index[&b];
                    if dist[i][j] == u32::MAX {
                        dist[i][j] = da + 1;
                        queue.push_back(b);
                    }
                }
            }
        }
        (nodes, dist)
    }

    /// Copies `other` into `self` under fresh ids; returns the id map.
    pub fn absorb(&mut self, other: &STree) -> BTreeMap<Node, Node> {
        let base = self.fresh_node();
        let map: BTreeMap<Node, Node> = other.nodes().enumerate().map(|(i, t)| (t, base + i as Node)).collect();
        for t in other.nodes() {
            self.add_node(map[&t]);
        }
        for ((u, v), s) in other.oriented_edges() {
            self.adj.entry(map[&u]).or_default().insert(map[&v]);
            self.alpha.insert((map[&u], map[&v]), s);
        }
        map
    }

    /// Renumbers nodes to `0..n` in ascending order of their current ids.
    pub fn compact(&self) -> (STree, BTreeMap<Node, Node>) {
        let map: BTreeMap<Node, Node> = self.nodes().enumerate().map(|(i, t)| (t, i as Node)).collect();
        let mut t = STree::default();
        for n in self.nodes() {
            t.add_node(map[&n]);
        }
        for ((u, v), s) in self.oriented_edges() {
            t.adj.entry(map[&u]).or_default().insert(map[&v]);
            t.alpha.insert((map[&u], map[&v]), s);
        }
        t.root = self.root.map(|r| map[&r]);
        (t, map)
    }

    /// Graphviz rendering; edges read `alpha(u,v)/alpha(v,u)` in external ids.
    pub fn to_dot(&self, u: &Universe) -> String {
        let mut out = String::from("graph stree {\n");
        for t in self.nodes() {
            let shape = if self.root == Some(t) { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  {t} [shape={shape}];");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(
                out,
                "  {a} -- {b} [label=\"{}/{}\"];",
                u.id(self.alpha(a, b)),
                u.id(self.alpha(b, a))
            );
        }
        out.push_str("}\n");
        out
    }
}
