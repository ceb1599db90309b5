//! Concrete universes: separations of finite sets and of finite graphs.

mod graph;
mod order;
mod set;

pub use graph::{graph_separations, separations_below, GraphInput};
pub use order::{is_submodular, submodularity_violation, OrderFunction};
pub use set::{build_set_universe, GroundSet, SetSeparation, SetUniverse, DEFAULT_MAX_CLOSURE, MAX_GROUND_SET};
