//! Prune, tighten and walk random S-trees.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangleduct::generate::random_stree;
use tangleduct::stree::{contract_to_tight, find_guided_sink, prune_to_irredundant, tighten_rooted, validate_stree};
use tangleduct::system::Orientation;

fn main() -> tangleduct::error::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..4 {
        let rt = random_stree(&mut rng, 5, 8)?;
        let sys = &rt.su.system;
        let pruned = prune_to_irredundant(&rt.tree, None);
        let tight = contract_to_tight(&pruned);
        let rep = validate_stree(&pruned, sys)?;
        println!(
            "{} nodes, pruned {} (irredundant: {}, order-respecting: {}), tight {}",
            rt.tree.node_count(),
            pruned.node_count(),
            rep.is_irredundant,
            rep.is_order_respecting,
            tight.node_count()
        );
        if let Some(x) = pruned.leaves().find(|&x| {
            let y = pruned.leaf_neighbour(x).expect("leaf");
            let r = pruned.alpha(x, y);
            !sys.is_trivial(r) && !sys.is_degenerate(r)
        }) {
            let rooted = tighten_rooted(&pruned, sys, x)?;
            println!("  rooted at {x}: {} nodes", rooted.node_count());
        }
        // every separation oriented towards its lower id side
        let o = Orientation::new(sys.separations().iter().copied());
        let sink = find_guided_sink(&pruned, &o);
        let star: Vec<_> = pruned.node_star(sink).iter().map(|&s| rt.su.describe(s)).collect();
        println!("  guided sink {sink} has star {star:?}");
    }
    Ok(())
}
