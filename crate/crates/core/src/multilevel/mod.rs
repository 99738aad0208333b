//! Coarsening hierarchy and the single V-cycle with MSS/MUR-controlled refinement.

pub(crate) mod coarsen;
mod embed;
mod kdtree;
mod matching;
mod refine;
mod subproblem;
mod vcycle;

pub use coarsen::{build_hierarchy, coarsen, interpolate, CoarseMap, CoarseningHierarchy};
pub use embed::{embed_sphere, SphereEmbedding, DEFAULT_EMBED_DIM, DEFAULT_EMBED_ITERS};
pub use kdtree::KdTree;
pub use matching::{match_pairs, Matching};
pub use refine::{refine_level, select_subset, LevelStats, RefinementConfig, ACCEPT_TOL};
pub use subproblem::{extract_subproblem, Subproblem};
pub use vcycle::{v_cycle, LevelReport, VCycleConfig, VCycleReport};
