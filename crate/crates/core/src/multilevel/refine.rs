use std::collections::VecDeque;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::extract_subproblem;
use crate::error::{check_len, Error, Result};
use crate::problem::{Bitstring, MaxCutGraph};
use crate::subsolver::Subsolver;

/// Minimum gain for a subproblem solution to count as an improvement.
pub const ACCEPT_TOL: f64 = 1e-9;

/// Space (MSS) and time (MUR) controls of the refinement loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementConfig {
    /// Maximal subproblem size.
    pub mss: usize,
    /// Maximal number of consecutive unsuccessful refinements.
    pub mur: usize,
    pub seed: u64,
}

impl RefinementConfig {
    pub fn new(mss: usize, mur: usize, seed: u64) -> Result<Self> {
        let cfg = Self { mss, mur, seed };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.mss < 2 {
            return Err(Error::InvalidConfig(format!("MSS must be at least 2, got {}", self.mss)));
        }
        if self.mur < 1 {
            return Err(Error::InvalidConfig("MUR must be at least 1".into()));
        }
        Ok(())
    }
}

/// Bookkeeping of one `refine_level` run.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LevelStats {
    pub initial_cut: f64,
    pub final_cut: f64,
    pub calls: usize,
    /// One flag per subsolver call.
    pub accepted: Vec<bool>,
    /// Global cut after each call.
    pub cut_trajectory: Vec<f64>,
    pub elapsed_secs: f64,
}

/// Seeded random center plus breadth-first growth to `size` nodes; when a component is
/// exhausted the search restarts from another random unvisited node.
pub fn select_subset<R: Rng>(g: &MaxCutGraph, size: usize, rng: &mut R) -> Vec<usize> {
    let n = g.n();
    let size = size.min(n);
    let mut taken = vec![false; n];
    let mut subset = Vec::with_capacity(size);
    let mut queue = VecDeque::new();
    while subset.len() < size {
        if queue.is_empty() {
            let free: Vec<usize> = (0..n).filter(|&v| !taken[v]).collect();
            let start = free[rng.random_range(0..free.len())];
            taken[start] = true;
            subset.push(start);
            queue.push_back(start);
            continue;
        }
        let u = queue.pop_front().unwrap();
        for &(v, _) in g.neighbors(u) {
            if subset.len() >= size {
                break;
            }
            if !taken[v] {
                taken[v] = true;
                subset.push(v);
                queue.push_back(v);
            }
        }
    }
    subset
}

/// Repeatedly solves subproblems of at most `mss` nodes and keeps a result only when the
/// global cut strictly improves. Stops after `mur` consecutive failures. The returned cut
/// is never below the initial one.
pub fn refine_level(
    g: &MaxCutGraph,
    init: &Bitstring,
    cfg: &RefinementConfig,
    subsolver: &mut dyn Subsolver,
) -> Result<(Bitstring, LevelStats)> {
    cfg.validate()?;
    check_len(g.n(), init.len())?;
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut x = init.clone();
    let mut cut = g.cut(&x)?;
    let mut stats = LevelStats { initial_cut: cut, final_cut: cut, ..Default::default() };
    let mut failures = 0;

    while failures < cfg.mur && g.n() > 0 {
        let subset = select_subset(g, cfg.mss, &mut rng);
        let sub = extract_subproblem(g, &x, &subset)?;
        let current = sub.restrict(&x);
        let call_seed = rng.random::<u64>();
        stats.calls += 1;
        let proposal = match subsolver.solve(&sub.hamiltonian, Some(&current), call_seed) {
            Ok(p) => p,
            Err(e) => {
                return Err(Error::SubsolverFailed { message: e.to_string(), best_so_far: Some(x) });
            }
        };
        check_len(subset.len(), proposal.len())?;
        let gain = sub.hamiltonian.eval(&current)? - sub.hamiltonian.eval(&proposal)?;
        let mut improved = false;
        if gain > ACCEPT_TOL {
            let candidate = sub.patch(&x, &proposal)?;
            let new_cut = g.cut(&candidate)?;
            // local and global evaluation may disagree by roundoff
            if new_cut > cut {
                x = candidate;
                cut = new_cut;
                improved = true;
            }
        }
        if improved {
            failures = 0;
        } else {
            failures += 1;
        }
        stats.accepted.push(improved);
        stats.cut_trajectory.push(cut);
    }
    stats.final_cut = cut;
    stats.elapsed_secs = started.elapsed().as_secs_f64();
    Ok((x, stats))
}
