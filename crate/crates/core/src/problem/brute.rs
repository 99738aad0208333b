use super::{Bitstring, Problem, Sense};
use crate::error::{Error, Result};

/// Largest instance [`brute_force`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Exact extrema of an objective over all assignments.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult {
    pub c_min: f64,
    pub c_max: f64,
    /// Optimal assignment for the problem's sense (lexicographically smallest on ties).
    pub argbest: Bitstring,
    /// Worst assignment for the problem's sense (lexicographically smallest on ties).
    pub argworst: Bitstring,
}

/// Enumerates all `2^n` assignments in Gray-code order with incremental energy updates.
/// Ties within 1e-9 resolve to the lexicographically smallest bitstring, and reported
/// extrema are re-evaluated directly on the problem.
pub fn brute_force<P: Problem + ?Sized>(problem: &P, limit: usize) -> Result<BruteForceResult> {
    let n = problem.num_vars();
    let limit = limit.min(BRUTE_FORCE_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let ising = problem.to_energy_form();
    let mut s = vec![1.0f64; n];
    let mut field: Vec<f64> = (0..n).map(|i| ising.local_field(i, &s)).collect();
    let mut energy = ising.eval_spins(&s);

    let lex_key = |mask: u64| if n == 0 { 0 } else { mask.reverse_bits() >> (64 - n) };
    let (mut min_e, mut min_mask) = (energy, 0u64);
    let (mut max_e, mut max_mask) = (energy, 0u64);
    let mut mask = 0u64;

    for k in 1u64..(1u64 << n) {
        let i = k.trailing_zeros() as usize;
        energy += -2.0 * s[i] * field[i];
        for &(j, v) in ising.neighbors(i) {
            field[j] -= 2.0 * v * s[i];
        }
        s[i] = -s[i];
        mask ^= 1 << i;

        if energy < min_e - 1e-9 || (energy <= min_e + 1e-9 && lex_key(mask) < lex_key(min_mask)) {
            min_e = min_e.min(energy);
            min_mask = mask;
        }
        if energy > max_e + 1e-9 || (energy >= max_e - 1e-9 && lex_key(mask) < lex_key(max_mask)) {
            max_e = max_e.max(energy);
            max_mask = mask;
        }
    }

    let argmin = Bitstring::from_mask(min_mask, n).evaluated(problem)?;
    let argmax = Bitstring::from_mask(max_mask, n).evaluated(problem)?;
    let c_min = argmin.cost().map(|c| c.value).unwrap_or_default();
    let c_max = argmax.cost().map(|c| c.value).unwrap_or_default();
    let (argbest, argworst) = match problem.sense() {
        Sense::Maximize => (argmax, argmin),
        Sense::Minimize => (argmin, argmax),
    };
    Ok(BruteForceResult { c_min, c_max, argbest, argworst })
}
