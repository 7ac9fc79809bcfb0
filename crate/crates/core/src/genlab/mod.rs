//! Verification, exhaustive search and seeded instance generation.

mod generate;
mod oracle;
mod verify;

pub use generate::{gen_graph, gen_linear, gen_regular, gen_uniform, generate, GenSpec, Model};
pub use oracle::{brute_force, SEARCH_LIMIT};
pub use verify::{verify, VerifyReport, Violation};
