//! Constructive 1/k-majority edge-colourings of hypergraphs.
//!
//! A colouring `c: E -> {1..C}` is a 1/k-majority colouring when every vertex
//! `v` sees each colour on at most `floor(d(v) / k)` of its incident edges.
//! Three colourers are provided:
//!
//! * [`partition`]: iterated discrepancy rounding with a fixed weight schedule,
//!   `k + 1` colours, needs `min_degree >= 2 r k^2`.
//! * [`linear`]: vertex splitting followed by greedy line-graph colouring,
//!   `k r + 1` colours, needs a linear hypergraph with `min_degree >= k^2 - k`.
//! * [`lll`]: seeded random colouring with local resampling, `k + 1` colours,
//!   backed by a threshold solver for the local-lemma degree bound.
//!
//! The rounding and partition code is generic over an exact field
//! ([`ExactField`]); [`Rational`] is the default instantiation.

pub mod error;
pub mod genlab;
pub mod hypergraph;
pub mod io;
pub mod linear;
pub mod lll;
pub mod partition;
pub mod rounder;
pub mod scalar;

pub use error::{Error, Result};
pub use hypergraph::{Colouring, Hypergraph, Weights};
pub use scalar::ExactField;

/// Arbitrary-precision rational, the default scalar for rounding.
pub type Rational = num_rational::BigRational;

/// Fixed-width rational. Cheap, but overflows on long rounding runs.
pub type Rational64 = num_rational::Rational64;

/// Edge weights over [`Rational`].
pub type Weighting = Weights<Rational>;

pub type RoundingTrace = rounder::RoundingTrace<Rational>;
pub type PartitionOutcome = partition::PartitionOutcome<Rational>;
pub type AlphaSchedule = partition::AlphaSchedule<Rational>;
