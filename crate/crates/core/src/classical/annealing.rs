use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::greedy::spins_to_bits;
use super::SubsolverBudget;
use crate::problem::{Bitstring, IsingHamiltonian};

/// Schedule knobs for [`simulated_annealing`]. The hot temperature is calibrated so a
/// random uphill move is accepted with probability `initial_acceptance`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnealingParams {
    pub restarts: usize,
    pub initial_acceptance: f64,
    pub cold_ratio: f64,
    pub calibration_moves: usize,
}

impl Default for AnnealingParams {
    fn default() -> Self {
        Self { restarts: 1, initial_acceptance: 0.8, cold_ratio: 1e-3, calibration_moves: 100 }
    }
}

pub fn simulated_annealing(h: &IsingHamiltonian, budget: &SubsolverBudget) -> Bitstring {
    anneal(h, budget, &AnnealingParams::default(), None)
}

/// Single-spin-flip Metropolis with a geometric schedule from `T_hot` to
/// `cold_ratio * T_hot` over the sweep budget. Returns the best state ever visited
/// (including `init`, when given).
pub fn anneal(
    h: &IsingHamiltonian,
    budget: &SubsolverBudget,
    params: &AnnealingParams,
    init: Option<&Bitstring>,
) -> Bitstring {
    let n = h.n();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    if n == 0 {
        return Bitstring::zeros(0);
    }
    let t_hot = hot_temperature(h, params, &mut rng);
    let t_cold = params.cold_ratio * t_hot;
    let sweeps = budget.max_sweeps.unwrap_or(SubsolverBudget::DEFAULT_SWEEPS).max(1);
    let decay = if sweeps > 1 { (t_cold / t_hot).powf(1.0 / (sweeps - 1) as f64) } else { 1.0 };
    let clock = budget.clock();

    let mut best: Option<(f64, Vec<f64>)> = init.map(|x| (h.eval_spins(&x.spins()), x.spins()));

    'restarts: for restart in 0..params.restarts.max(1) {
        let mut s: Vec<f64> = match (restart, init) {
            (0, Some(x)) => x.spins(),
            _ => (0..n).map(|_| if rng.random::<bool>() { 1.0 } else { -1.0 }).collect(),
        };
        let mut field: Vec<f64> = (0..n).map(|i| h.local_field(i, &s)).collect();
        let mut energy = h.eval_spins(&s);
        if best.as_ref().is_none_or(|(e, _)| energy < *e) {
            best = Some((energy, s.clone()));
        }
        let mut temp = t_hot;
        for _ in 0..sweeps {
            for i in 0..n {
                let delta = -2.0 * s[i] * field[i];
                if delta <= 0.0 || rng.random::<f64>() < (-delta / temp).exp() {
                    for &(j, v) in h.neighbors(i) {
                        field[j] -= 2.0 * v * s[i];
                    }
                    s[i] = -s[i];
                    energy += delta;
                    if energy < best.as_ref().map_or(f64::INFINITY, |b| b.0) - 1e-12 {
                        best = Some((energy, s.clone()));
                    }
                }
            }
            temp *= decay;
            if clock.expired() {
                break 'restarts;
            }
        }
    }
    spins_to_bits(&best.expect("at least one state visited").1)
}

fn hot_temperature<R: Rng>(h: &IsingHamiltonian, params: &AnnealingParams, rng: &mut R) -> f64 {
    let n = h.n();
    let s: Vec<f64> = (0..n).map(|_| if rng.random::<bool>() { 1.0 } else { -1.0 }).collect();
    let uphill: Vec<f64> = (0..params.calibration_moves)
        .map(|_| {
            let i = rng.random_range(0..n);
            -2.0 * s[i] * h.local_field(i, &s)
        })
        .filter(|&d| d > 0.0)
        .collect();
    if uphill.is_empty() {
        return 1.0;
    }
    let mean = uphill.iter().sum::<f64>() / uphill.len() as f64;
    -mean / params.initial_acceptance.ln()
}
