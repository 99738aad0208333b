use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::config::{InputFormat, InstanceSource, ReferenceSource, RunConfig};
use super::generate_instance;
use crate::classical::{anneal, AnnealingParams, SubsolverBudget};
use crate::error::{Error, Result};
use crate::multilevel::v_cycle;
use crate::ndar::{ndar_solve, stage_ledger, NdarConfig, StageRow};
use crate::problem::io::{read_graph, read_qubo};
use crate::problem::BRUTE_FORCE_LIMIT;
use crate::problem::{approximation_ratio, brute_force, jaccard_cut_similarity, maxcut_to_ising, qubo_to_maxcut};
use crate::problem::{recover_qubo_solution, Bitstring, ConversionRecord, MaxCutGraph, QuboProblem, Sense};
use crate::subsolver::{build_subsolver, SubsolverKind};

/// A problem as loaded, plus the Max-Cut graph every pipeline works on.
#[derive(Debug, Clone)]
pub struct LoadedProblem {
    pub graph: MaxCutGraph,
    pub qubo: Option<(QuboProblem, ConversionRecord)>,
}

impl LoadedProblem {
    pub fn load(source: &InstanceSource) -> Result<Self> {
        match source {
            InstanceSource::File { path, format: InputFormat::Graph } => {
                Ok(Self { graph: read_graph(path)?, qubo: None })
            }
            InstanceSource::File { path, format: InputFormat::Qubo } => Ok(Self::from_qubo(read_qubo(path)?)),
            InstanceSource::Generated { kind, n, p, seed } => {
                Ok(Self { graph: generate_instance(*kind, *n, *p, *seed)?, qubo: None })
            }
        }
    }

    pub fn from_qubo(q: QuboProblem) -> Self {
        let (graph, rec) = qubo_to_maxcut(&q);
        Self { graph, qubo: Some((q, rec)) }
    }

    pub fn num_vars(&self) -> usize {
        self.qubo.as_ref().map_or(self.graph.n(), |(q, _)| q.n())
    }

    /// Solution and objective in the input's own variables.
    pub fn original(&self, y: &Bitstring) -> Result<(Bitstring, f64)> {
        match &self.qubo {
            Some((q, rec)) => {
                let x = recover_qubo_solution(y, rec)?;
                let v = q.eval(&x)?;
                Ok((x, v))
            }
            None => Ok((y.clone(), self.graph.cut(y)?)),
        }
    }

    fn cut_from_original(&self, value: f64) -> f64 {
        self.qubo.as_ref().map_or(value, |(_, rec)| rec.maxcut_from_other(value))
    }

    fn graph_solution(&self, x: &Bitstring) -> Result<Bitstring> {
        match &self.qubo {
            Some(_) => {
                let mut bits = x.bits().to_vec();
                bits.push(0);
                Bitstring::new(bits)
            }
            None => Ok(x.clone()),
        }
    }
}

/// Reference values on the Max-Cut graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reference {
    pub c_min: f64,
    pub c_max: f64,
    pub solution: Option<Bitstring>,
    /// How the values were obtained.
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub best: f64,
    #[serde(default)]
    pub worst: Option<f64>,
    #[serde(default)]
    pub solution: Option<Bitstring>,
}

pub fn sidecar_path(input: &Path) -> PathBuf {
    let mut s = input.as_os_str().to_owned();
    s.push(".ref.json");
    PathBuf::from(s)
}

fn annealed_max_cut(g: &MaxCutGraph, seed: u64) -> Result<(Bitstring, f64)> {
    let (h, _) = maxcut_to_ising(g);
    let params = AnnealingParams { restarts: 10, ..Default::default() };
    let x = anneal(&h, &SubsolverBudget::sweeps(2000, seed), &params, None);
    let c = g.cut(&x)?;
    Ok((x, c))
}

fn negated(g: &MaxCutGraph) -> Result<MaxCutGraph> {
    MaxCutGraph::new(g.n(), g.edges().iter().map(|e| (e.i, e.j, -e.w)))
}

pub fn compute_reference(problem: &LoadedProblem, source: &ReferenceSource, input: Option<&Path>) -> Result<Reference> {
    let g = &problem.graph;
    let sidecar = match source {
        ReferenceSource::File(p) => Some(p.clone()),
        ReferenceSource::Auto => input.map(sidecar_path).filter(|p| p.exists()),
        ReferenceSource::BruteForce => None,
    };
    let enumerable = g.n() <= BRUTE_FORCE_LIMIT;
    if matches!(source, ReferenceSource::BruteForce) || (matches!(source, ReferenceSource::Auto) && enumerable) {
        let r = brute_force(g, BRUTE_FORCE_LIMIT)?;
        // + 0.0 normalizes a negative zero
        return Ok(Reference {
            c_min: r.c_min + 0.0,
            c_max: r.c_max + 0.0,
            solution: Some(r.argbest),
            method: "brute_force".into(),
        });
    }
    let lowest = || -> Result<f64> { Ok((-annealed_max_cut(&negated(g)?, 1)?.1).min(0.0)) };
    if let Some(path) = sidecar {
        let sc: Sidecar = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
        let c_max = problem.cut_from_original(sc.best);
        let c_min = match sc.worst {
            Some(w) => problem.cut_from_original(w),
            None => lowest()?,
        };
        let solution = sc.solution.as_ref().map(|x| problem.graph_solution(x)).transpose()?;
        return Ok(Reference { c_min, c_max, solution, method: format!("sidecar {}", path.display()) });
    }
    let (x, c_max) = annealed_max_cut(g, 0)?;
    Ok(Reference { c_min: lowest()?, c_max, solution: Some(x), method: "annealing_estimate".into() })
}

/// One point of a solution-quality trajectory, as a cut on the Max-Cut graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub iteration: usize,
    pub stage: String,
    pub cut: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub seed: u64,
    pub error: Option<String>,
    /// Assignment of the input's variables.
    pub solution: Option<Bitstring>,
    /// Objective in the input's frame (QUBO value or cut).
    pub cost: f64,
    pub cut: f64,
    pub ar: f64,
    pub jaccard: Option<f64>,
    pub subsolver_calls: usize,
    /// Best cut after each NDAR iteration or subsolver call.
    pub trace: Vec<TracePoint>,
    /// NDAR stage costs (Ising energies of the graph) for direct NDAR runs.
    pub ledger: Vec<StageRow>,
    pub wall_secs: f64,
}

impl SeedRecord {
    pub fn completed(&self) -> bool {
        self.error.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub completed: usize,
    pub failed: usize,
    pub mean_ar: f64,
    pub max_ar: f64,
    /// Empirical standard deviation of the AR (n - 1 denominator).
    pub std_ar: f64,
    pub three_sigma: f64,
    pub mean_calls: f64,
}

impl Aggregate {
    pub fn from_seeds(seeds: &[SeedRecord]) -> Self {
        let done: Vec<&SeedRecord> = seeds.iter().filter(|s| s.completed()).collect();
        let m = done.len();
        if m == 0 {
            return Self { failed: seeds.len(), ..Default::default() };
        }
        let mean = done.iter().map(|s| s.ar).sum::<f64>() / m as f64;
        let var = if m > 1 { done.iter().map(|s| (s.ar - mean).powi(2)).sum::<f64>() / (m - 1) as f64 } else { 0.0 };
        Self {
            completed: m,
            failed: seeds.len() - m,
            mean_ar: mean,
            max_ar: done.iter().map(|s| s.ar).fold(f64::NEG_INFINITY, f64::max),
            std_ar: var.sqrt(),
            three_sigma: 3.0 * var.sqrt(),
            mean_calls: done.iter().map(|s| s.subsolver_calls as f64).sum::<f64>() / m as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub config: RunConfig,
    pub instance: String,
    pub num_vars: usize,
    pub graph_nodes: usize,
    pub reference: Reference,
    pub seeds: Vec<SeedRecord>,
    pub aggregate: Aggregate,
}

impl RunRecord {
    pub fn any_completed(&self) -> bool {
        self.aggregate.completed > 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Copy with wall-clock fields zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for s in &mut r.seeds {
            s.wall_secs = 0.0;
        }
        r
    }
}

type SeedOutcome = (Bitstring, usize, Vec<TracePoint>, Vec<StageRow>);

fn solve_seed(problem: &LoadedProblem, cfg: &RunConfig, seed: u64) -> Result<SeedOutcome> {
    let g = &problem.graph;
    let budget = cfg.budget.with_seed(seed);
    let ndar = NdarConfig { seed, ..cfg.ndar.clone() };
    if cfg.pipeline.multilevel {
        let mut sub = build_subsolver(cfg.pipeline.subsolver, budget, &ndar)?;
        let (x, report) = v_cycle(g, &cfg.vcycle(seed), sub.as_mut())?;
        let mut trace = Vec::new();
        for lvl in report.levels.iter().rev() {
            for &c in &lvl.stats.cut_trajectory {
                trace.push(TracePoint { iteration: trace.len() + 1, stage: format!("level{}", lvl.level), cut: c });
            }
        }
        return Ok((x, report.total_calls, trace, Vec::new()));
    }
    let (h, rec) = maxcut_to_ising(g);
    if cfg.pipeline.subsolver == SubsolverKind::Ndar {
        let (x, state) = ndar_solve(&h, &ndar)?;
        let ledger = stage_ledger(&state);
        let trace = ledger
            .iter()
            .map(|r| TracePoint {
                iteration: r.iteration + 1,
                stage: "ndar".into(),
                cut: rec.maxcut_from_other(r.best),
            })
            .collect();
        return Ok((x, 1, trace, ledger));
    }
    let mut sub = build_subsolver(cfg.pipeline.subsolver, budget, &ndar)?;
    let x = sub.solve(&h, None, seed)?;
    let cut = g.cut(&x)?;
    Ok((x, 1, vec![TracePoint { iteration: 1, stage: "final".into(), cut }], Vec::new()))
}

fn run_seed(problem: &LoadedProblem, reference: &Reference, cfg: &RunConfig, seed: u64) -> SeedRecord {
    let started = Instant::now();
    let outcome = solve_seed(problem, cfg, seed).and_then(|(y, calls, trace, ledger)| {
        let cut = problem.graph.cut(&y)?;
        let (x, cost) = problem.original(&y)?;
        let jaccard = reference.solution.as_ref().map(|r| jaccard_cut_similarity(&problem.graph, &y, r)).transpose()?;
        Ok(SeedRecord {
            seed,
            error: None,
            solution: Some(x),
            cost,
            cut,
            ar: approximation_ratio(cut, reference.c_min, reference.c_max, Sense::Maximize),
            jaccard,
            subsolver_calls: calls,
            trace,
            ledger,
            wall_secs: 0.0,
        })
    });
    let mut rec = outcome.unwrap_or_else(|e: Error| SeedRecord {
        seed,
        error: Some(e.to_string()),
        solution: None,
        cost: f64::NAN,
        cut: f64::NAN,
        ar: f64::NAN,
        jaccard: None,
        subsolver_calls: 0,
        trace: Vec::new(),
        ledger: Vec::new(),
        wall_secs: 0.0,
    });
    rec.wall_secs = started.elapsed().as_secs_f64();
    rec
}

/// Runs the configured pipeline once per seed. Solver failures are recorded in the
/// seed's row; only configuration, loading and reference errors abort the run.
pub fn run(cfg: &RunConfig) -> Result<RunRecord> {
    cfg.validate()?;
    let problem = LoadedProblem::load(&cfg.source)?;
    run_loaded(cfg, &problem)
}

/// As [`run`], on an already loaded problem.
pub fn run_loaded(cfg: &RunConfig, problem: &LoadedProblem) -> Result<RunRecord> {
    let input = match &cfg.source {
        InstanceSource::File { path, .. } => Some(path.as_path()),
        InstanceSource::Generated { .. } => None,
    };
    let reference = compute_reference(problem, &cfg.reference, input)?;
    let seeds: Vec<SeedRecord> = cfg.seeds.iter().map(|&s| run_seed(problem, &reference, cfg, s)).collect();
    Ok(RunRecord {
        config: cfg.clone(),
        instance: cfg.source.label(),
        num_vars: problem.num_vars(),
        graph_nodes: problem.graph.n(),
        aggregate: Aggregate::from_seeds(&seeds),
        reference,
        seeds,
    })
}
