//! Statevector simulation of standard and Time-Block QAOA with attractor-noise sampling.

mod sample;
mod state;
mod swap_network;
mod timeblock;

pub use sample::{correlation_matrix, exact_correlation_matrix, sample, NoiseConfig, SampleSet};
pub use state::MAX_QUBITS;
pub use state::{diagonal_energies, exact_expectation, simulate_qaoa, simulate_tbqaoa, QaoaParams, StateVector};
pub use swap_network::{swap_network_layers, Layer};
pub use timeblock::{build_timeblock_partition, Block, TimeBlockPartition};
