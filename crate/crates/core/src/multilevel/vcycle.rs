use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{build_hierarchy, interpolate, refine_level, LevelStats, RefinementConfig};
use super::{DEFAULT_EMBED_DIM, DEFAULT_EMBED_ITERS};
use crate::error::{Error, Result};
use crate::problem::{brute_force, maxcut_to_ising, Bitstring, MaxCutGraph, BRUTE_FORCE_LIMIT};
use crate::subsolver::Subsolver;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VCycleConfig {
    pub refinement: RefinementConfig,
    pub coarsest_size: usize,
    pub embed_dim: usize,
    pub embed_iters: usize,
    pub seed: u64,
}

impl VCycleConfig {
    pub fn new(mss: usize, mur: usize, seed: u64) -> Self {
        Self {
            refinement: RefinementConfig { mss, mur, seed },
            coarsest_size: 20,
            embed_dim: DEFAULT_EMBED_DIM,
            embed_iters: DEFAULT_EMBED_ITERS,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelReport {
    pub level: usize,
    pub nodes: usize,
    pub edges: usize,
    /// Cut of the solution as it arrives at this level.
    pub interpolated_cut: f64,
    pub stats: LevelStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VCycleReport {
    pub seed: u64,
    pub config: VCycleConfig,
    pub subsolver: String,
    pub level_sizes: Vec<usize>,
    /// Indexed by level, finest first.
    pub levels: Vec<LevelReport>,
    pub coarsest_exact: bool,
    pub total_calls: usize,
    pub final_cut: f64,
    pub coarsening_secs: f64,
    pub coarsest_secs: f64,
    pub total_secs: f64,
}

impl VCycleReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Single V-cycle: coarsen, solve the coarsest level (exactly when small enough), then
/// interpolate and refine back up to the finest level.
pub fn v_cycle(
    g0: &MaxCutGraph,
    cfg: &VCycleConfig,
    subsolver: &mut dyn Subsolver,
) -> Result<(Bitstring, VCycleReport)> {
    cfg.refinement.validate()?;
    let started = Instant::now();
    let hierarchy = build_hierarchy(g0, cfg.coarsest_size, cfg.embed_dim, cfg.embed_iters, cfg.seed)?;
    let coarsening_secs = started.elapsed().as_secs_f64();

    let depth = hierarchy.depth();
    let coarsest = hierarchy.coarsest();
    let t = Instant::now();
    let mut coarsest_stats = LevelStats::default();
    let coarsest_exact = coarsest.n() <= BRUTE_FORCE_LIMIT;
    let mut x = if coarsest_exact {
        brute_force(coarsest, BRUTE_FORCE_LIMIT)?.argbest
    } else {
        let (ising, _) = maxcut_to_ising(coarsest);
        coarsest_stats.calls = 1;
        let sol = subsolver
            .solve(&ising, None, cfg.seed)
            .map_err(|e| Error::SubsolverFailed { message: e.to_string(), best_so_far: None })?;
        coarsest_stats.accepted.push(true);
        sol
    };
    let coarsest_cut = coarsest.cut(&x)?;
    coarsest_stats.initial_cut = coarsest_cut;
    coarsest_stats.final_cut = coarsest_cut;
    coarsest_stats.cut_trajectory.push(coarsest_cut);
    coarsest_stats.elapsed_secs = t.elapsed().as_secs_f64();
    let coarsest_secs = coarsest_stats.elapsed_secs;

    let mut levels = vec![LevelReport {
        level: depth - 1,
        nodes: coarsest.n(),
        edges: coarsest.num_edges(),
        interpolated_cut: coarsest_cut,
        stats: coarsest_stats,
    }];

    for l in (0..depth - 1).rev() {
        let g = &hierarchy.levels[l];
        let fine = interpolate(&x, &hierarchy.maps[l])?;
        let interpolated_cut = g.cut(&fine)?;
        let mut rcfg = cfg.refinement;
        rcfg.seed = crate::multilevel::coarsen::level_seed(cfg.refinement.seed ^ 0xf1e1d, l);
        let (refined, stats) = refine_level(g, &fine, &rcfg, subsolver)?;
        x = refined;
        levels.push(LevelReport { level: l, nodes: g.n(), edges: g.num_edges(), interpolated_cut, stats });
    }
    levels.reverse();

    let final_cut = g0.cut(&x)?;
    let report = VCycleReport {
        seed: cfg.seed,
        config: *cfg,
        subsolver: subsolver.name().to_string(),
        level_sizes: hierarchy.sizes(),
        total_calls: levels.iter().map(|l| l.stats.calls).sum(),
        levels,
        coarsest_exact,
        final_cut,
        coarsening_secs,
        coarsest_secs,
        total_secs: started.elapsed().as_secs_f64(),
    };
    Ok((x, report))
}
