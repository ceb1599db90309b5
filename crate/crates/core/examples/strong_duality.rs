//! Strong duality on graphs. `F` holds the stars of at most three
//! separations whose small sides cover the vertex set, so an F-tangle of
//! `S_k` orients every separation towards a big side.

use tangleduct::backends::{graph_separations, GraphInput, SetUniverse, DEFAULT_MAX_CLOSURE};
use tangleduct::duality::{strong_duality, Certificate, StrongOptions};
use tangleduct::error::Error;
use tangleduct::star::{Star, StarFamily};

fn covering_stars(su: &SetUniverse) -> StarFamily {
    let sys = &su.system;
    let u = sys.universe();
    let full = su.ground.full();
    let m: Vec<_> = sys.members().iter().copied().filter(|&s| !sys.is_degenerate(s)).collect();
    let mut f = StarFamily::new();
    let a = |s| su.sides(s).a;
    for i in 0..m.len() {
        for j in i..m.len() {
            for k in j..m.len() {
                let mut sigma = vec![m[i], m[j], m[k]];
                sigma.dedup();
                if a(m[i]) | a(m[j]) | a(m[k]) == full && u.is_star(&sigma) {
                    f.insert(Star::new(sigma));
                }
            }
        }
    }
    f
}

fn main() -> tangleduct::error::Result<()> {
    let opts = StrongOptions { auto_standardize: true };
    for (name, g, k) in [
        ("path on 5 vertices", GraphInput::path(5), 2),
        ("triangle", GraphInput::complete(3), 2),
        ("3x3 grid", GraphInput::grid(3, 3), 2),
    ] {
        let su = graph_separations(&g, k, DEFAULT_MAX_CLOSURE)?;
        let f = covering_stars(&su);
        match strong_duality(&su.system, &f, opts) {
            Ok(run) => match &run.certificate {
                Certificate::Orientation(o) => println!("{name}, k = {k}: tangle of {} separations", o.len()),
                Certificate::Tree(t) => {
                    println!("{name}, k = {k}: S-tree with {} nodes after {} shifts", t.node_count(), run.trace.len());
                    for (x, y) in t.edges() {
                        println!("  {x} -- {y}: {}", su.describe(t.alpha(x, y)));
                    }
                }
            },
            Err(e @ Error::NotFSeparable { .. }) => println!("{name}, k = {k}: {e}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
