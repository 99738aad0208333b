use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::greedy::spins_to_bits;
use super::SubsolverBudget;
use crate::problem::{Bitstring, IsingHamiltonian};

pub const DEFAULT_TENURE: usize = 10;

/// Steepest-descent single-flip tabu search. Each of the `max_sweeps` iterations makes one
/// move. A flipped variable stays tabu for `tenure` iterations unless the move would beat
/// the best energy seen so far.
pub fn tabu_search(h: &IsingHamiltonian, budget: &SubsolverBudget, tenure: usize) -> Bitstring {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let x0 = Bitstring::random(h.n(), &mut rng);
    tabu_search_from(h, budget, tenure, &x0)
}

pub fn tabu_search_from(h: &IsingHamiltonian, budget: &SubsolverBudget, tenure: usize, x0: &Bitstring) -> Bitstring {
    let n = h.n();
    assert!(tenure >= 1, "tabu tenure must be at least 1");
    assert_eq!(n, x0.len(), "tabu_search: length mismatch");
    if n == 0 {
        return x0.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ 0x7ab0);
    let clock = budget.clock();
    let iterations = budget.max_sweeps.unwrap_or(SubsolverBudget::DEFAULT_SWEEPS);

    let mut s = x0.spins();
    let mut field: Vec<f64> = (0..n).map(|i| h.local_field(i, &s)).collect();
    let mut energy = h.eval_spins(&s);
    let mut best = (energy, s.clone());
    let mut tabu_until = vec![0usize; n];

    for iter in 1..=iterations {
        // (delta, tie-break draw, index) for the best admissible and best overall move
        let mut admissible: Option<(f64, u32, usize)> = None;
        let mut fallback: Option<(f64, u32, usize)> = None;
        for i in 0..n {
            let delta = -2.0 * s[i] * field[i];
            let cand = (delta, rng.random::<u32>(), i);
            let better = |cur: &Option<(f64, u32, usize)>| {
                cur.is_none_or(|c| delta < c.0 - 1e-12 || (delta <= c.0 + 1e-12 && cand.1 < c.1))
            };
            let allowed = tabu_until[i] < iter || energy + delta < best.0 - 1e-12;
            if allowed && better(&admissible) {
                admissible = Some(cand);
            }
            if better(&fallback) {
                fallback = Some(cand);
            }
        }
        let (delta, _, i) = admissible.or(fallback).expect("n > 0");
        for &(j, v) in h.neighbors(i) {
            field[j] -= 2.0 * v * s[i];
        }
        s[i] = -s[i];
        energy += delta;
        tabu_until[i] = iter + tenure;
        if energy < best.0 - 1e-12 {
            best = (energy, s.clone());
        }
        if clock.expired() {
            break;
        }
    }
    spins_to_bits(&best.1)
}
