//! Shift a small S-tree across a separation and watch the labels move.

use tangleduct::backends::{build_set_universe, GroundSet, SetSeparation, DEFAULT_MAX_CLOSURE};
use tangleduct::duality::{emulates, shift_stree};
use tangleduct::stree::{validate_stree, STree};

fn main() -> tangleduct::error::Result<()> {
    let g = GroundSet::indexed(4);
    let full = g.full();
    let pool: Vec<_> = (0..=full).map(|a| SetSeparation::new(a, full & !a)).collect();
    let su = build_set_universe(&g, &pool, DEFAULT_MAX_CLOSURE)?;
    let sys = &su.system;
    let u = &su.universe;
    let sep = |a: u32| su.sep_of(SetSeparation::new(a, full & !a)).expect("bipartition");

    // leaf 0 sends r = ({0}, {1,2,3}) to a node of degree 3
    let r = sep(0b0001);
    let mut t = STree::default();
    t.add_edge(0, 1, r, u.inv(r));
    t.add_edge(2, 1, sep(0b0010), u.inv(sep(0b0010)));
    t.add_edge(3, 1, sep(0b1100), u.inv(sep(0b1100)));
    let s0 = sep(0b0011);
    println!("s0 = {} emulates r = {}: {}", su.describe(s0), su.describe(r), emulates(sys, s0, r));

    let shifted = shift_stree(&t, sys, 0, s0)?;
    for ((a, b), s) in t.oriented_edges() {
        println!("{a}->{b}: {} became {}", su.describe(s), su.describe(shifted.alpha(a, b)));
    }
    let rep = validate_stree(&shifted, sys)?;
    println!("over stars: {}, order-respecting: {}", rep.is_over_stars, rep.is_order_respecting);
    Ok(())
}
