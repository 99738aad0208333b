use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{greedy_local_search, SubsolverBudget};
use crate::problem::{maxcut_to_ising, Bitstring, MaxCutGraph};

/// Cap on coordinate sweeps of the rank-2 relaxation.
pub const MAX_RELAXATION_SWEEPS: usize = 1000;
const CONVERGENCE_TOL: f64 = 1e-8;

/// Per-node angles of a rank-2 (circle) relaxation of Max-Cut.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleVector(pub Vec<f64>);

impl AngleVector {
    /// `sum_{(i,j)} w_ij (1 - cos(theta_i - theta_j)) / 2`.
    pub fn objective(&self, g: &MaxCutGraph) -> f64 {
        g.edges().iter().map(|e| e.w * (1.0 - (self.0[e.i] - self.0[e.j]).cos()) / 2.0).sum()
    }

    /// `x_i = 1` when `theta_i` lies in the half-circle `[alpha, alpha + pi)`.
    pub fn round(&self, alpha: f64) -> Bitstring {
        let bits = self.0.iter().map(|&t| if (t - alpha).rem_euclid(TAU) < PI { 1 } else { 0 }).collect();
        Bitstring::new(bits).expect("binary")
    }
}

/// Coordinate ascent: each angle moves to the direction of `-sum_j w_ij (cos theta_j, sin theta_j)`.
/// Returns the angles and the objective after every sweep (index 0 is the random start).
pub fn rank2_relaxation(g: &MaxCutGraph, budget: &SubsolverBudget) -> (AngleVector, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut theta = AngleVector((0..g.n()).map(|_| rng.random_range(0.0..TAU)).collect());
    let mut trace = vec![theta.objective(g)];
    let clock = budget.clock();
    let cap = budget.sweep_cap().min(MAX_RELAXATION_SWEEPS);
    for _ in 0..cap {
        for i in 0..g.n() {
            let (mut vx, mut vy) = (0.0, 0.0);
            for &(j, w) in g.neighbors(i) {
                vx -= w * theta.0[j].cos();
                vy -= w * theta.0[j].sin();
            }
            if vx != 0.0 || vy != 0.0 {
                theta.0[i] = vy.atan2(vx).rem_euclid(TAU);
            }
        }
        let obj = theta.objective(g);
        let prev = *trace.last().unwrap();
        trace.push(obj);
        if (obj - prev).abs() < CONVERGENCE_TOL || clock.expired() {
            break;
        }
    }
    (theta, trace)
}

/// Rank-2 relaxation followed by `rounding_attempts` random-diameter roundings, each polished
/// with greedy local search. Returns the best cut found.
pub fn burer_monteiro_rank2(g: &MaxCutGraph, budget: &SubsolverBudget, rounding_attempts: usize) -> Bitstring {
    assert!(rounding_attempts >= 1, "need at least one rounding attempt");
    let (theta, _) = rank2_relaxation(g, budget);
    let (ising, _) = maxcut_to_ising(g);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ 0xb2b2);
    let mut best: Option<(f64, Bitstring)> = None;
    for _ in 0..rounding_attempts {
        let alpha = rng.random_range(0.0..TAU);
        let x = greedy_local_search(&ising, &theta.round(alpha));
        let cut = g.cut(&x).expect("length matches");
        if best.as_ref().is_none_or(|(c, _)| cut > *c + 1e-12) {
            best = Some((cut, x));
        }
    }
    best.expect("rounding_attempts >= 1").1
}
