//! Cross-check the strong engine against the brute-force census on random
//! instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangleduct::generate::{random_set_system, random_standard_family, shift_closure};
use tangleduct::oracle::{cross_check, DEFAULT_CAP};

fn main() -> tangleduct::error::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut tangles, mut trees, mut skipped, mut disagreements) = (0, 0, 0, 0);
    for _ in 0..300 {
        let n = rng.gen_range(3..=5);
        let seps = rng.gen_range(2..=5);
        let su = random_set_system(&mut rng, n, seps)?;
        let f = random_standard_family(&mut rng, &su.system, 4);
        let f = shift_closure(&su.system, &f, 64);
        let r = cross_check(&su.system, &f, DEFAULT_CAP)?;
        match (r.hypothesis_met, r.engine_found_tangle) {
            (false, _) => skipped += 1,
            (true, true) => tangles += 1,
            (true, false) => trees += 1,
        }
        if !r.agrees {
            disagreements += 1;
        }
    }
    println!("tangles {tangles}, trees {trees}, not separable {skipped}, disagreements {disagreements}");
    Ok(())
}
