//! Multilevel solver for large QUBO / Max-Cut / Ising problems.
//!
//! A single V-cycle coarsens the graph with a sphere embedding and K-D-tree pairing,
//! solves the coarsest level exactly, then refines level by level with bounded-size
//! subproblems. Subproblems go to a classical heuristic ([`classical`]) or to a
//! simulated noisy quantum pipeline ([`ndar`]): Time-Block QAOA sampled under an
//! attractor noise channel, adaptive gauge remapping, relax-and-round on the sample
//! correlations and a Hamming-distance-2 local search.
//!
//! Runnable walkthroughs of each capability live in the crate's `examples/` directory.

pub mod classical;
pub mod error;
pub mod harness;
pub mod multilevel;
pub mod ndar;
pub mod optimizer;
pub mod problem;
pub mod qaoa;
pub mod subsolver;

pub use error::{Error, Result};
