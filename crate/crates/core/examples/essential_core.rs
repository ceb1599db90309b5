//! Essential cores: drop trivial separations from stars and trees, then
//! expand back.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangleduct::essential::{essential_core, essentialize_stree, expand_to_f};
use tangleduct::generate::random_stree;
use tangleduct::oracle::{enumerate, DEFAULT_CAP};
use tangleduct::stree::{is_over, validate_stree};

fn main() -> tangleduct::error::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let rt = random_stree(&mut rng, 5, 7)?;
        let sys = &rt.su.system;
        let core = essential_core(&rt.family, sys);
        let e = essentialize_stree(&rt.tree, sys)?;
        let back = expand_to_f(&e, &rt.family, sys)?;
        let same = match (enumerate(sys, &rt.family, DEFAULT_CAP), enumerate(sys, &core, DEFAULT_CAP)) {
            (Ok(a), Ok(b)) => (a.f_tangles == b.f_tangles).to_string(),
            _ => "too large to enumerate".into(),
        };
        println!(
            "tree {} -> essential {} -> expanded {} nodes; essential: {}, back over F: {}, same tangles: {same}",
            rt.tree.node_count(),
            e.node_count(),
            back.node_count(),
            validate_stree(&e, sys)?.is_essential,
            is_over(&back, &rt.family),
        );
    }
    Ok(())
}
