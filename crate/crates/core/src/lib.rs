pub mod backends;
pub mod cli;
pub mod duality;
pub mod error;
pub mod essential;
pub mod generate;
pub mod io;
pub mod oracle;
pub mod star;
pub mod stree;
pub mod system;
pub mod universe;
