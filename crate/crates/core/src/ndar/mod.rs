//! Noise-directed adaptive remapping with Time-Block QAOA, correlation rounding (QRR,
//! w-QRR) and a Hamming-distance-2 local search.

mod gauge;
mod hdqls;
mod rounding;
mod solve;

pub use gauge::preprocess_gauge;
pub use hdqls::hdqls;
pub use rounding::{classical_relax_round, qrr_matrix, qrr_round, sign_round_candidates, wqrr_matrix, wqrr_round};
pub use solve::{ndar_solve, stage_ledger, stage_ledger_csv, IterationRecord, NdarConfig, NdarState, StageRow};
pub use solve::{NUM_ORDERINGS, POOL_SIZE};
