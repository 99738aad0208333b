//! Uniform interface over everything that can solve a refinement subproblem.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classical::{anneal, burer_monteiro_rank2, greedy_local_search, tabu_search_from, AnnealingParams};
use crate::classical::{SubsolverBudget, DEFAULT_TENURE};
use crate::error::{check_len, Error, Result};
use crate::ndar::{ndar_solve, NdarConfig};
use crate::problem::BRUTE_FORCE_LIMIT;
use crate::problem::{brute_force, ising_to_maxcut, recover_ising_solution, Bitstring, IsingHamiltonian};
use crate::qaoa::MAX_QUBITS;

/// Minimizes an Ising Hamiltonian. `init`, when given, is the current assignment of the
/// subproblem; implementations must never return anything worse than it.
pub trait Subsolver {
    fn name(&self) -> &str;
    fn solve(&mut self, h: &IsingHamiltonian, init: Option<&Bitstring>, seed: u64) -> Result<Bitstring>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsolverKind {
    Sa,
    Tabu,
    Greedy,
    Bm2,
    Ndar,
    Brute,
}

impl SubsolverKind {
    pub const ALL: [SubsolverKind; 6] = [Self::Sa, Self::Tabu, Self::Greedy, Self::Bm2, Self::Ndar, Self::Brute];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Sa => "sa",
            Self::Tabu => "tabu",
            Self::Greedy => "greedy",
            Self::Bm2 => "bm2",
            Self::Ndar => "ndar",
            Self::Brute => "brute",
        }
    }
}

impl fmt::Display for SubsolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubsolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| Error::UnknownName(format!("subsolver '{s}'")))
    }
}

fn keep_better(h: &IsingHamiltonian, init: Option<&Bitstring>, proposal: Bitstring) -> Result<Bitstring> {
    check_len(h.n(), proposal.len())?;
    match init {
        Some(x0) if h.eval(x0)? <= h.eval(&proposal)? => Ok(x0.clone()),
        _ => Ok(proposal),
    }
}

/// One of the classical heuristics behind the [`Subsolver`] interface.
#[derive(Debug, Clone)]
pub struct ClassicalSubsolver {
    pub kind: SubsolverKind,
    pub budget: SubsolverBudget,
    pub annealing: AnnealingParams,
    pub tenure: usize,
    pub rounding_attempts: usize,
}

impl ClassicalSubsolver {
    pub fn new(kind: SubsolverKind, budget: SubsolverBudget) -> Result<Self> {
        if matches!(kind, SubsolverKind::Ndar | SubsolverKind::Brute) {
            return Err(Error::InvalidConfig(format!("'{kind}' is not a classical heuristic")));
        }
        budget.validate()?;
        Ok(Self { kind, budget, annealing: AnnealingParams::default(), tenure: DEFAULT_TENURE, rounding_attempts: 10 })
    }
}

impl Subsolver for ClassicalSubsolver {
    fn name(&self) -> &str {
        self.kind.as_str()
    }

    fn solve(&mut self, h: &IsingHamiltonian, init: Option<&Bitstring>, seed: u64) -> Result<Bitstring> {
        if let Some(x0) = init {
            check_len(h.n(), x0.len())?;
        }
        let budget = self.budget.with_seed(seed);
        let start = || match init {
            Some(x0) => x0.clone(),
            None => Bitstring::random(h.n(), &mut ChaCha8Rng::seed_from_u64(seed)),
        };
        let proposal = match self.kind {
            SubsolverKind::Sa => anneal(h, &budget, &self.annealing, init),
            SubsolverKind::Tabu => tabu_search_from(h, &budget, self.tenure, &start()),
            SubsolverKind::Greedy => greedy_local_search(h, &start()),
            SubsolverKind::Bm2 => {
                let (g, rec) = ising_to_maxcut(h);
                let y = burer_monteiro_rank2(&g, &budget, self.rounding_attempts);
                recover_ising_solution(&y, &rec)?
            }
            SubsolverKind::Ndar | SubsolverKind::Brute => unreachable!(),
        };
        keep_better(h, init, proposal)
    }
}

/// Exact enumeration; only usable up to the brute-force limit.
#[derive(Debug, Clone, Copy, Default)]
pub struct BruteForceSubsolver;

impl Subsolver for BruteForceSubsolver {
    fn name(&self) -> &str {
        "brute"
    }

    fn solve(&mut self, h: &IsingHamiltonian, init: Option<&Bitstring>, _seed: u64) -> Result<Bitstring> {
        let best = brute_force(h, BRUTE_FORCE_LIMIT)?.argbest;
        keep_better(h, init, best)
    }
}

/// The simulated noisy quantum pipeline as a subsolver. Subproblems must fit the
/// statevector simulator.
#[derive(Debug, Clone)]
pub struct NdarSubsolver {
    pub config: NdarConfig,
}

impl Subsolver for NdarSubsolver {
    fn name(&self) -> &str {
        "ndar"
    }

    fn solve(&mut self, h: &IsingHamiltonian, init: Option<&Bitstring>, seed: u64) -> Result<Bitstring> {
        if h.n() > MAX_QUBITS {
            return Err(Error::TooLarge { n: h.n(), limit: MAX_QUBITS });
        }
        let cfg = NdarConfig { seed, ..self.config.clone() };
        let (best, _) = ndar_solve(h, &cfg)?;
        keep_better(h, init, best)
    }
}

/// Subsolver by name with the given classical budget and NDAR settings.
pub fn build_subsolver(kind: SubsolverKind, budget: SubsolverBudget, ndar: &NdarConfig) -> Result<Box<dyn Subsolver>> {
    Ok(match kind {
        SubsolverKind::Brute => Box::new(BruteForceSubsolver),
        SubsolverKind::Ndar => {
            ndar.validate()?;
            Box::new(NdarSubsolver { config: ndar.clone() })
        }
        _ => Box::new(ClassicalSubsolver::new(kind, budget)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frustrated() -> IsingHamiltonian {
        IsingHamiltonian::new(vec![0.3, -0.2, 0.1, 0.0], vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0), (2, 3, -0.5)], 0.0)
            .unwrap()
    }

    #[test]
    fn names_round_trip() {
        for k in SubsolverKind::ALL {
            assert_eq!(k.to_string().parse::<SubsolverKind>().unwrap(), k);
        }
        assert!("gurobi".parse::<SubsolverKind>().is_err());
    }

    #[test]
    fn never_worse_than_init() {
        let h = frustrated();
        let opt = brute_force(&h, 24).unwrap().argbest;
        for kind in [SubsolverKind::Sa, SubsolverKind::Tabu, SubsolverKind::Greedy, SubsolverKind::Bm2] {
            let mut s = ClassicalSubsolver::new(kind, SubsolverBudget::sweeps(5, 0)).unwrap();
            let out = s.solve(&h, Some(&opt), 3).unwrap();
            assert!(h.eval(&out).unwrap() <= h.eval(&opt).unwrap() + 1e-12, "{kind}");
        }
    }

    #[test]
    fn brute_subsolver_is_exact() {
        let h = frustrated();
        let out = BruteForceSubsolver.solve(&h, None, 0).unwrap();
        assert_eq!(h.eval(&out).unwrap(), brute_force(&h, 24).unwrap().c_min);
    }
}
