//! Classical heuristics, usable as refinement subsolvers or as whole-problem baselines.

mod annealing;
mod budget;
mod greedy;
mod rank2;
mod tabu;

pub use annealing::{anneal, simulated_annealing, AnnealingParams};
pub use budget::SubsolverBudget;
pub use greedy::greedy_local_search;
pub use rank2::{burer_monteiro_rank2, rank2_relaxation, AngleVector, MAX_RELAXATION_SWEEPS};
pub use tabu::{tabu_search, tabu_search_from, DEFAULT_TENURE};
