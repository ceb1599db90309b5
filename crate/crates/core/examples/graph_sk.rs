//! The separations of order < k of a 3x3 grid.

use tangleduct::backends::{graph_separations, GraphInput, DEFAULT_MAX_CLOSURE};

fn main() -> tangleduct::error::Result<()> {
    let g = GraphInput::grid(3, 3);
    for k in 1..=3 {
        let su = graph_separations(&g, k, DEFAULT_MAX_CLOSURE)?;
        let sys = &su.system;
        println!(
            "k = {k}: {} oriented separations, {} small, {} trivial, closure {}",
            sys.members().len(),
            sys.members().iter().filter(|&&s| sys.is_small(s)).count(),
            sys.trivial_members().len(),
            su.universe.len()
        );
    }
    Ok(())
}
