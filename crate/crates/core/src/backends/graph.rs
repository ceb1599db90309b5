//! Separations of a finite graph and the systems `S_k` of those of order `< k`.

use std::collections::BTreeSet;

use super::set::{build_set_universe, GroundSet, SetSeparation, SetUniverse};
use crate::error::{Error, Result};

/// An undirected graph on named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInput {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphInput {
    /// Parses a whitespace edge list: one `u v` pair per line. A line with a
    /// single token declares an isolated vertex; `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        let intern = |name: &str, vertices: &mut Vec<String>| -> usize {
            match vertices.iter().position(|v| v == name) {
                Some(i) => i,
                None => {
                    vertices.push(name.to_string());
                    vertices.len() - 1
                }
            }
        };
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                [v] => {
                    intern(v, &mut vertices);
                }
                [u, v] => {
                    let (u, v) = (intern(u, &mut vertices), intern(v, &mut vertices));
                    if u != v {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
                _ => return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1))),
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(GraphInput { vertices, edges })
    }

    /// `rows × cols` grid with vertices named `r,c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let vertices = (0..rows).flat_map(|r| (0..cols).map(move |c| format!("{r},{c}"))).collect();
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        GraphInput { vertices, edges }
    }

    pub fn path(n: usize) -> Self {
        GraphInput {
            vertices: (0..n).map(|i| i.to_string()).collect(),
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        GraphInput {
            vertices: (0..n).map(|i| i.to_string()).collect(),
            edges: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        }
    }

    fn neighbours(&self) -> Vec<u32> {
        let mut nb = vec![0u32; self.vertices.len()];
        for &(u, v) in &self.edges {
            nb[u] |= 1 << v;
            nb[v] |= 1 << u;
        }
        nb
    }

    /// `{A, B}` with `A ∪ B = V` is a graph separation iff no edge joins
    /// `A \ B` to `B \ A`.
    pub fn is_separation(&self, s: SetSeparation) -> bool {
        let (only_a, only_b) = (s.a & !s.b, s.b & !s.a);
        self.edges.iter().all(|&(u, v)| {
            let (bu, bv) = (1u32 << u, 1u32 << v);
            !(only_a & bu != 0 && only_b & bv != 0 || only_a & bv != 0 && only_b & bu != 0)
        })
    }
}

/// Components of the subgraph induced on `alive`, as vertex masks.
fn components(neighbours: &[u32], alive: u32) -> Vec<u32> {
    let mut rest = alive;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = neighbours[v] & alive & !comp;
            comp |= new;
            frontier |= new;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

fn subsets_below(n: usize, k: usize, mut visit: impl FnMut(u32)) {
    fn rec(start: usize, n: usize, left: usize, mask: u32, visit: &mut dyn FnMut(u32)) {
        visit(mask);
        if left == 0 {
            return;
        }
        for i in start..n {
            rec(i + 1, n, left - 1, mask | 1 << i, visit);
        }
    }
    if k > 0 {
        rec(0, n, k - 1, 0, &mut visit);
    }
}

/// All oriented graph separations of order `< k`, ascending by bitmask.
pub fn separations_below(g: &GraphInput, k: usize) -> Result<Vec<SetSeparation>> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let ground = GroundSet::new(g.vertices.clone())?;
    let full = ground.full();
    let nb = g.neighbours();
    let mut out = BTreeSet::new();
    subsets_below(g.vertices.len(), k, |x| {
        let comps = components(&nb, full & !x);
        for choice in 0u64..(1u64 << comps.len()) {
            let mut a = x;
            let mut b = x;
            for (i, &c) in comps.iter().enumerate() {
                if choice >> i & 1 == 1 {
                    a |= c;
                } else {
                    b |= c;
                }
            }
            out.insert(SetSeparation::new(a, b));
        }
    });
    Ok(out.into_iter().collect())
}

/// `S_k` of a graph inside the join/meet closure of its members.
pub fn graph_separations(g: &GraphInput, k: usize, max_closure: usize) -> Result<SetUniverse> {
    let pool = separations_below(g, k)?;
    let ground = GroundSet::new(g.vertices.clone())?;
    build_set_universe(&ground, &pool, max_closure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::DEFAULT_MAX_CLOSURE;

    /// Every assignment of vertices to A-only, B-only or both.
    fn brute_force(g: &GraphInput, k: usize) -> Vec<SetSeparation> {
        let n = g.vertices.len();
        let mut out = Vec::new();
        for code in 0..3usize.pow(n as u32) {
            let (mut a, mut b, mut c) = (0u32, 0u32, code);
            for v in 0..n {
                match c % 3 {
                    0 => a |= 1 << v,
                    1 => b |= 1 << v,
                    _ => {
                        a |= 1 << v;
                        b |= 1 << v;
                    }
                }
                c /= 3;
            }
            let s = SetSeparation::new(a, b);
            if g.is_separation(s) && (s.order() as usize) < k {
                out.push(s);
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn single_edge_with_k1() {
        let g = GraphInput::parse_edge_list("u v\n").unwrap();
        let seps = separations_below(&g, 1).unwrap();
        assert_eq!(seps, vec![SetSeparation::new(0, 0b11), SetSeparation::new(0b11, 0)]);
        assert_eq!(seps, brute_force(&g, 1));
    }

    #[test]
    fn triangle_crossing_edge() {
        let g = GraphInput::complete(3);
        // A = {a,b}, B = {b,c}: the edge ac joins A\B to B\A.
        assert!(!g.is_separation(SetSeparation::new(0b011, 0b110)));
        assert_eq!(separations_below(&g, 2).unwrap(), brute_force(&g, 2));
    }

    #[test]
    fn path_of_three() {
        let g = GraphInput::path(3);
        let s = SetSeparation::new(0b011, 0b110);
        assert_eq!(s.order(), 1);
        assert!(separations_below(&g, 2).unwrap().contains(&s));
        assert_eq!(separations_below(&g, 2).unwrap(), brute_force(&g, 2));
        assert_eq!(separations_below(&g, 3).unwrap(), brute_force(&g, 3));
    }

    #[test]
    fn grid_matches_brute_force() {
        let g = GraphInput::grid(3, 3);
        for k in 1..=3 {
            assert_eq!(separations_below(&g, k).unwrap(), brute_force(&g, k), "k = {k}");
        }
    }

    #[test]
    fn grid_order_two_system() {
        let su = graph_separations(&GraphInput::grid(3, 3), 2, DEFAULT_MAX_CLOSURE).unwrap();
        // (∅,V), (V,∅) and ({x},V), (V,{x}) for the nine vertices
        assert_eq!(su.system.members().len(), 20);
        // the closure is every improper separation and its flip
        assert_eq!(su.universe.len(), 2 * 512 - 1);
    }

    #[test]
    fn edge_list_parsing() {
        let g = GraphInput::parse_edge_list("# demo\na b\nb c # trailing\n\nd\nb a\n").unwrap();
        assert_eq!(g.vertices, ["a", "b", "c", "d"]);
        assert_eq!(g.edges, [(0, 1), (1, 2)]);
        assert!(GraphInput::parse_edge_list("a b c").is_err());
        assert_eq!(separations_below(&g, 0), Err(Error::InvalidK));
    }
}
