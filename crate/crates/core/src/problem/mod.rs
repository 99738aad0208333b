//! Problem representations (QUBO, Max-Cut, Ising), conversions, metrics and an exact
//! enumeration oracle.

mod adjacency;
mod bitstring;
mod brute;
mod convert;
mod gauge;
mod graph;
pub mod io;
mod ising;
mod metrics;
mod qubo;

use serde::{Deserialize, Serialize};

pub use adjacency::Adjacency;
pub use bitstring::{Bitstring, CachedCost};
pub use brute::{brute_force, BruteForceResult, BRUTE_FORCE_LIMIT};
pub use convert::{
    ising_to_maxcut, maxcut_to_ising, qubo_to_maxcut, recover_ising_solution, recover_qubo_solution, ConversionKind,
    ConversionRecord,
};
pub use gauge::GaugeVector;
pub use graph::{Edge, MaxCutGraph};
pub use ising::IsingHamiltonian;
pub use metrics::{approximation_ratio, jaccard_cut_similarity};
pub use qubo::QuboProblem;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Qubo,
    MaxCut,
    Ising,
}

/// Common view over the three representations.
pub trait Problem {
    fn num_vars(&self) -> usize;
    fn sense(&self) -> Sense;
    fn representation(&self) -> Representation;
    fn evaluate(&self, x: &Bitstring) -> Result<f64>;
    /// An Ising Hamiltonian over the same bits whose energy equals the objective value.
    fn to_energy_form(&self) -> IsingHamiltonian;
}

/// Cut value of `x`; thin alias kept for symmetry with [`eval_ising`].
pub fn eval_cut(g: &MaxCutGraph, x: &Bitstring) -> Result<f64> {
    g.cut(x)
}

pub fn eval_ising(h: &IsingHamiltonian, x: &Bitstring) -> Result<f64> {
    h.eval(x)
}

pub fn apply_gauge(h: &IsingHamiltonian, g: &GaugeVector) -> Result<IsingHamiltonian> {
    h.apply_gauge(g)
}
