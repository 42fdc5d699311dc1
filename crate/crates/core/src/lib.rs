//! Certified entanglement bounds for graph states.
//!
//! The geometric measure, relative entropy of entanglement and logarithmic
//! robustness coincide on stabilizer states, so every bound here is reported
//! as `E = -log2 F` where `F` is the largest squared overlap with a pure
//! product state.
//!
//! - [`graph`] and [`gf2`]: bitmask graphs, vertex sets and GF(2) rank.
//! - [`state`]: exact amplitudes, stabilizer self-checks, product-state
//!   overlaps and symmetric-ansatz coefficients.
//! - [`bounds`]: the independent-set upper bound with its witness state and
//!   the cut-rank lower bound, plus a Schmidt-rank oracle.
//! - [`optimize`]: fidelity maximization and the assembled [`BoundsReport`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod named;
pub mod optimize;
pub mod state;

pub use bounds::{BipartitionResult, MisResult};
pub use error::Error;
pub use gf2::Gf2Matrix;
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use optimize::{BoundsReport, OptimizerConfig, OptimumParams, OptimumResult};
pub use state::{CoeffVector, ComplexAmplitude, ProductState};

/// Absolute tolerance for floating-point equalities on amplitudes and fidelities.
pub const TOLERANCE: f64 = 1e-12;
