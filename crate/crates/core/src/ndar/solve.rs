use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{hdqls, preprocess_gauge, qrr_round, wqrr_round};
use crate::error::{Error, Result};
use crate::optimizer::{Optimizer, SearchSpace, Strategy};
use crate::problem::{approximation_ratio, Bitstring, GaugeVector, IsingHamiltonian, Sense};
use crate::qaoa::{correlation_matrix, sample, simulate_qaoa, NoiseConfig, QaoaParams, SampleSet, MAX_QUBITS};

/// Number of distinct solutions kept between iterations.
pub const POOL_SIZE: usize = 4;
/// Size of the gate-ordering menu offered to the optimizer.
pub const NUM_ORDERINGS: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NdarConfig {
    pub trials: usize,
    pub shots: u64,
    /// Time-block depth; `None` means half the register. Clamped to the problem size.
    pub k: Option<usize>,
    pub p: usize,
    pub max_iterations: usize,
    pub stall_limit: usize,
    pub noise: NoiseConfig,
    pub seed: u64,
    /// Random draws for the initial gauge.
    pub n_random: usize,
    /// When false the gauge stays at identity throughout (no remapping baseline).
    pub remap: bool,
    pub strategy: Strategy,
}

impl Default for NdarConfig {
    fn default() -> Self {
        Self {
            trials: 150,
            shots: 1000,
            k: None,
            p: 1,
            max_iterations: 10,
            stall_limit: 2,
            noise: NoiseConfig::noiseless(),
            seed: 0,
            n_random: 10_000,
            remap: true,
            strategy: Strategy::tpe(),
        }
    }
}

impl NdarConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.shots == 0 || self.p == 0 || self.n_random == 0 {
            return Err(Error::InvalidConfig("trials, shots, p and n_random must be at least 1".into()));
        }
        if self.max_iterations == 0 || self.stall_limit == 0 {
            return Err(Error::InvalidConfig("max_iterations and stall_limit must be at least 1".into()));
        }
        if self.k == Some(0) {
            return Err(Error::InvalidConfig("k must be at least 1".into()));
        }
        self.noise.validate()
    }

    pub fn block_depth(&self, n: usize) -> usize {
        self.k.unwrap_or(n.div_ceil(2)).clamp(1, n.max(1))
    }
}

/// Stage-wise outcome of one iteration; all costs in the original frame.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Gauge under which the best trial was sampled.
    pub gauge: Bitstring,
    pub best_params: QaoaParams,
    pub raw: Bitstring,
    pub raw_cost: f64,
    pub qrr: Bitstring,
    pub qrr_cost: f64,
    pub wqrr: Bitstring,
    pub wqrr_cost: f64,
    pub hdqls: Bitstring,
    pub hdqls_cost: f64,
    /// Best cost seen up to and including this iteration.
    pub best_cost: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NdarState {
    /// Iterations executed.
    pub iteration: usize,
    pub gauge: GaugeVector,
    /// Best distinct solutions, sorted by cost.
    pub pool: Vec<(Bitstring, f64)>,
    pub best: Bitstring,
    pub best_cost: f64,
    /// Cost of the starting gauge's solution.
    pub initial_cost: f64,
    pub trajectory: Vec<IterationRecord>,
}

fn orderings(n: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    while out.len() < NUM_ORDERINGS {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        out.push(perm);
    }
    out
}

fn search_space(p: usize) -> Result<SearchSpace> {
    let mut space = SearchSpace::new();
    for l in 0..p {
        space = space.continuous(&format!("gamma{l}"), -PI, PI)?.continuous(&format!("beta{l}"), 0.0, PI)?;
    }
    space.categorical("ordering", NUM_ORDERINGS)?.categorical("pool", POOL_SIZE)
}

fn update_pool(pool: &mut Vec<(Bitstring, f64)>, candidates: impl IntoIterator<Item = (Bitstring, f64)>) {
    let mut seen: HashMap<Bitstring, f64> = pool.drain(..).collect();
    for (x, c) in candidates {
        seen.entry(x).or_insert(c);
    }
    let mut all: Vec<_> = seen.into_iter().collect();
    all.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    all.truncate(POOL_SIZE);
    *pool = all;
}

struct Trial {
    gauge: GaugeVector,
    params: QaoaParams,
    samples: SampleSet,
    best: Bitstring,
    energy: f64,
}

/// Noise-directed adaptive remapping around simulated Time-Block QAOA. Each iteration
/// runs a fresh black-box optimization over angles, gate ordering and the choice of pool
/// solution used as gauge, scoring trials by their best sampled energy. The best trial's
/// correlations feed QRR and w-QRR, the best stage result is polished by HDQLS, and the
/// pool keeps the four best distinct solutions. Stops after `stall_limit` iterations
/// without improvement.
pub fn ndar_solve(h: &IsingHamiltonian, cfg: &NdarConfig) -> Result<(Bitstring, NdarState)> {
    cfg.validate()?;
    let n = h.n();
    if n > MAX_QUBITS {
        return Err(Error::TooLarge { n, limit: MAX_QUBITS });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let gauge0 = if cfg.remap { preprocess_gauge(h, cfg.n_random, rng.random())? } else { GaugeVector::identity(n) };
    let x0 = gauge0.as_bitstring();
    let c0 = h.eval(&x0)?;
    let mut state = NdarState {
        iteration: 0,
        gauge: gauge0,
        pool: vec![(x0.clone(), c0)],
        best: x0,
        best_cost: c0,
        initial_cost: c0,
        trajectory: Vec::new(),
    };
    if n == 0 {
        return Ok((state.best.clone(), state));
    }
    let menu = orderings(n, rng.random());
    let space = search_space(cfg.p)?;
    let k = cfg.block_depth(n);
    let mut stall = 0;

    for it in 0..cfg.max_iterations {
        let mut opt = Optimizer::new(space.clone(), cfg.strategy, rng.random());
        let gauged: Vec<(GaugeVector, IsingHamiltonian)> = state
            .pool
            .iter()
            .map(|(x, _)| {
                let g = if cfg.remap { GaugeVector::from(x) } else { GaugeVector::identity(n) };
                let hg = h.apply_gauge(&g)?;
                Ok((g, hg))
            })
            .collect::<Result<_>>()?;
        let mut best_trial: Option<Trial> = None;
        let mut trial_bests = Vec::with_capacity(cfg.trials);
        for _ in 0..cfg.trials {
            let point = opt.ask();
            let gamma = (0..cfg.p).map(|l| point.float(2 * l)).collect();
            let beta = (0..cfg.p).map(|l| point.float(2 * l + 1)).collect();
            let ordering = menu[point.choice(2 * cfg.p)].clone();
            let (g, hg) = &gauged[point.choice(2 * cfg.p + 1) % gauged.len()];
            let params = QaoaParams { gamma, beta, ordering };
            let psi = simulate_qaoa(hg, k, &params)?;
            let samples = sample(&psi, cfg.shots, &cfg.noise, rng.random())?;
            let (xg, e) = samples.best_by(|x| hg.eval(x).unwrap_or(f64::INFINITY)).expect("at least one shot");
            opt.tell(point, e);
            let x = g.transform(&xg)?;
            trial_bests.push((x.clone(), e));
            if best_trial.as_ref().is_none_or(|t| e < t.energy) {
                best_trial = Some(Trial { gauge: g.clone(), params, samples, best: x, energy: e });
            }
        }
        let trial = best_trial.expect("trials >= 1");
        let hg = h.apply_gauge(&trial.gauge)?;
        let corr = correlation_matrix(&trial.samples)?;
        let qrr = trial.gauge.transform(&qrr_round(&corr, &hg)?)?;
        let wqrr = trial.gauge.transform(&wqrr_round(&corr, &hg)?)?;
        let raw_cost = h.eval(&trial.best)?;
        let qrr_cost = h.eval(&qrr)?;
        let wqrr_cost = h.eval(&wqrr)?;
        let stage_best = [(&trial.best, raw_cost), (&qrr, qrr_cost), (&wqrr, wqrr_cost)]
            .into_iter()
            .fold((&trial.best, raw_cost), |b, c| if c.1 < b.1 { c } else { b });
        let polished = hdqls(h, stage_best.0)?;
        let polished_cost = h.eval(&polished)?;

        update_pool(
            &mut state.pool,
            trial_bests.into_iter().chain([
                (qrr.clone(), qrr_cost),
                (wqrr.clone(), wqrr_cost),
                (polished.clone(), polished_cost),
            ]),
        );
        let (head, head_cost) = state.pool[0].clone();
        if head_cost < state.best_cost {
            state.best = head;
            state.best_cost = head_cost;
            stall = 0;
        } else {
            stall += 1;
        }
        state.gauge = if cfg.remap { GaugeVector::from(&state.pool[0].0) } else { GaugeVector::identity(n) };
        state.iteration = it + 1;
        state.trajectory.push(IterationRecord {
            iteration: it,
            gauge: trial.gauge.as_bitstring(),
            best_params: trial.params,
            raw: trial.best,
            raw_cost,
            qrr,
            qrr_cost,
            wqrr,
            wqrr_cost,
            hdqls: polished,
            hdqls_cost: polished_cost,
            best_cost: state.best_cost,
        });
        if stall >= cfg.stall_limit {
            break;
        }
    }
    Ok((state.best.clone(), state))
}

/// Per-iteration stage costs in the original frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StageRow {
    pub iteration: usize,
    pub raw: f64,
    pub qrr: f64,
    pub wqrr: f64,
    pub hdqls: f64,
    pub best: f64,
}

pub fn stage_ledger(state: &NdarState) -> Vec<StageRow> {
    state
        .trajectory
        .iter()
        .map(|r| StageRow {
            iteration: r.iteration,
            raw: r.raw_cost,
            qrr: r.qrr_cost,
            wqrr: r.wqrr_cost,
            hdqls: r.hdqls_cost,
            best: r.best_cost,
        })
        .collect()
}

/// CSV `iteration,stage,cost,ar` with one line per stage; `ar` is left empty without
/// reference extrema `(c_min, c_max)`.
pub fn stage_ledger_csv(rows: &[StageRow], extrema: Option<(f64, f64)>) -> String {
    let mut out = String::from("iteration,stage,cost,ar\n");
    for r in rows {
        for (stage, cost) in [("raw", r.raw), ("qrr", r.qrr), ("wqrr", r.wqrr), ("hdqls", r.hdqls), ("best", r.best)] {
            let ar = extrema
                .map(|(lo, hi)| approximation_ratio(cost, lo, hi, Sense::Minimize).to_string())
                .unwrap_or_default();
            writeln!(out, "{},{stage},{cost},{ar}", r.iteration).unwrap();
        }
    }
    out
}
