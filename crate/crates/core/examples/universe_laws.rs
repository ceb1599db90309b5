//! Build a universe by hand and from set separations, then check the laws.

use tangleduct::backends::{build_set_universe, GroundSet, SetSeparation, DEFAULT_MAX_CLOSURE};
use tangleduct::universe::{validate_universe, RawUniverse};

fn main() -> tangleduct::error::Result<()> {
    // a two-element chain r < s, with s* < r*
    let raw = RawUniverse {
        elements: vec![10, 11, 20, 21],
        inverse: vec![(10, 11), (20, 21)],
        leq: vec![(10, 10), (11, 11), (20, 20), (21, 21), (10, 20), (21, 11)],
        ..RawUniverse::default()
    };
    let u = validate_universe(&raw)?;
    println!("abstract: {} elements, lattice: {}", u.len(), u.has_lattice());

    let ground = GroundSet::new(["a", "b", "c"].map(String::from).to_vec())?;
    let pool = [SetSeparation::new(0b011, 0b110), SetSeparation::new(0b001, 0b111)];
    let su = build_set_universe(&ground, &pool, DEFAULT_MAX_CLOSURE)?;
    su.universe.check_laws()?;
    println!("set closure: {} elements, laws hold", su.universe.len());
    for s in su.system.members() {
        let t = su.universe.inv(*s);
        let j = su.universe.join(*s, t).expect("lattice");
        println!("  {} v {} = {}", su.describe(*s), su.describe(t), su.describe(j));
    }
    Ok(())
}
