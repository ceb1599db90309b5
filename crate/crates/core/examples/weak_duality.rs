//! Weak duality on all bipartitions of a 3-set: forbidding every
//! single-separation star leaves no way out but a tree.

use tangleduct::backends::{build_set_universe, GroundSet, SetSeparation, DEFAULT_MAX_CLOSURE};
use tangleduct::duality::{verify_weak, weak_duality, Certificate};
use tangleduct::star::{Star, StarFamily};

fn main() -> tangleduct::error::Result<()> {
    let g = GroundSet::indexed(3);
    let pool: Vec<_> = (1..7).map(|a| SetSeparation::new(a, 7 & !a)).collect();
    let su = build_set_universe(&g, &pool, DEFAULT_MAX_CLOSURE)?;
    let sys = &su.system;

    let small: StarFamily = sys.members().iter().filter(|&&s| su.sides(s).a.count_ones() == 1).map(|&s| Star::singleton(s)).collect();
    for (name, f) in [("no stars", StarFamily::new()), ("points", small.clone()), ("points and their inverses", {
        let mut f = small;
        for &s in sys.members() {
            f.insert(Star::singleton(s));
        }
        f
    })] {
        let cert = weak_duality(sys, &f)?;
        let ok = verify_weak(sys, &f, &cert)?.all_passed();
        match &cert {
            Certificate::Orientation(o) => {
                let picks: Vec<_> = o.picks().iter().map(|&s| su.describe(s)).collect();
                println!("{name}: avoiding orientation {picks:?} (verified: {ok})");
            }
            Certificate::Tree(t) => println!("{name}: S-tree with {} nodes (verified: {ok})", t.node_count()),
        }
    }
    Ok(())
}
