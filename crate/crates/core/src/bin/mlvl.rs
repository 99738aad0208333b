use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;

use mlvl::classical::SubsolverBudget;
use mlvl::harness::{
    emit_plot_data, run, InputFormat, InstanceKind, InstanceSource, Pipeline, ReferenceSource, RunConfig,
};
use mlvl::ndar::NdarConfig;
use mlvl::optimizer::Strategy;
use mlvl::qaoa::NoiseConfig;

#[derive(Parser, Debug)]
#[command(
    name = "mlvl",
    version,
    about = "Multilevel Max-Cut / QUBO solver with classical and simulated NDAR subsolvers"
)]
struct Args {
    /// Instance file (Max-Cut edge list or QUBO)
    #[arg(long, required_unless_present = "generate")]
    input: Option<PathBuf>,

    /// Input format: graph or qubo
    #[arg(long, default_value = "graph")]
    format: String,

    /// Random instance instead of a file: sk_int:N, sk_real:N or gnp:N:P
    #[arg(long, conflicts_with = "input")]
    generate: Option<String>,

    /// Seed of the generated instance
    #[arg(long, default_value_t = 0)]
    instance_seed: u64,

    /// sa, tabu, greedy, bm2, ndar, brute; prefix with mlvl- for the V-cycle
    #[arg(long, default_value = "mlvl-sa")]
    pipeline: String,

    #[arg(long, default_value_t = 20)]
    mss: usize,

    #[arg(long, default_value_t = 3)]
    mur: usize,

    /// Coarsest level size
    #[arg(long, default_value_t = 20)]
    coarsest: usize,

    /// Comma list (0,3,7) or half-open range (0..10)
    #[arg(long, default_value = "0")]
    seeds: String,

    #[arg(long, default_value_t = 1000)]
    shots: u64,

    #[arg(long, default_value_t = 150)]
    trials: usize,

    /// Time-block depth (defaults to half the register)
    #[arg(long)]
    k: Option<usize>,

    #[arg(long, default_value_t = 1)]
    p: usize,

    /// Attractor damping probability
    #[arg(long, default_value_t = 0.0)]
    pdamp: f64,

    /// Wall-clock limit per classical subsolver call
    #[arg(long)]
    budget_seconds: Option<f64>,

    /// Sweep limit per classical subsolver call
    #[arg(long, default_value_t = 1000)]
    sweeps: usize,

    /// random or tpe
    #[arg(long, default_value = "tpe")]
    strategy: String,

    /// Disable gauge remapping in NDAR
    #[arg(long)]
    no_remap: bool,

    /// JSON sidecar with reference values (default: enumerate or look for <input>.ref.json)
    #[arg(long)]
    reference: Option<PathBuf>,

    #[arg(long, default_value = "out")]
    out_dir: PathBuf,
}

fn parse_seeds(s: &str) -> Result<Vec<u64>, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|e| format!("bad seed range: {e}"))?;
        let b: u64 = b.trim().parse().map_err(|e| format!("bad seed range: {e}"))?;
        return Ok((a..b).collect());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|e| format!("bad seed '{t}': {e}"))).collect()
}

fn parse_generate(s: &str, seed: u64) -> Result<InstanceSource, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let kind: InstanceKind = parts[0].parse().map_err(|e| format!("{e}"))?;
    let n = parts.get(1).ok_or("missing node count")?.parse().map_err(|e| format!("bad node count: {e}"))?;
    let p = match parts.get(2) {
        Some(p) => p.parse().map_err(|e| format!("bad edge probability: {e}"))?,
        None => 0.0,
    };
    Ok(InstanceSource::Generated { kind, n, p, seed })
}

fn build_config(args: &Args) -> Result<RunConfig, String> {
    let source = match (&args.generate, &args.input) {
        (Some(gen), _) => parse_generate(gen, args.instance_seed)?,
        (None, Some(path)) => {
            let format: InputFormat = args.format.parse().map_err(|e| format!("{e}"))?;
            InstanceSource::File { path: path.clone(), format }
        }
        (None, None) => return Err("either --input or --generate is required".into()),
    };
    let pipeline: Pipeline = args.pipeline.parse().map_err(|e| format!("{e}"))?;
    let mut cfg = RunConfig::new(source, pipeline);
    cfg.mss = args.mss;
    cfg.mur = args.mur;
    cfg.coarsest_size = args.coarsest;
    cfg.seeds = parse_seeds(&args.seeds)?;
    cfg.budget = SubsolverBudget {
        max_time: args.budget_seconds.map(Duration::from_secs_f64),
        max_sweeps: Some(args.sweeps),
        seed: 0,
    };
    cfg.ndar = NdarConfig {
        trials: args.trials,
        shots: args.shots,
        k: args.k,
        p: args.p,
        noise: NoiseConfig::new(args.pdamp).map_err(|e| format!("{e}"))?,
        remap: !args.no_remap,
        strategy: args.strategy.parse::<Strategy>().map_err(|e| format!("{e}"))?,
        ..NdarConfig::default()
    };
    if let Some(r) = &args.reference {
        cfg.reference = ReferenceSource::File(r.clone());
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match build_config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let record = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let write = || -> mlvl::Result<()> {
        std::fs::create_dir_all(&args.out_dir)?;
        let name = format!("{}_{}.json", record.instance, record.config.pipeline);
        std::fs::write(args.out_dir.join(name), record.to_json()?)?;
        emit_plot_data(std::slice::from_ref(&record), &args.out_dir)?;
        Ok(())
    };
    if let Err(e) = write() {
        eprintln!("error writing results: {e}");
    }

    println!(
        "{} via {}: reference [{}, {}] ({})",
        record.instance,
        record.config.pipeline,
        record.reference.c_min,
        record.reference.c_max,
        record.reference.method
    );
    for s in &record.seeds {
        match &s.error {
            None => println!(
                "  seed {:>3}  cost {:>12.4}  AR {:.4}  calls {:>5}  {:.2}s",
                s.seed, s.cost, s.ar, s.subsolver_calls, s.wall_secs
            ),
            Some(e) => println!("  seed {:>3}  failed: {e}", s.seed),
        }
    }
    let a = &record.aggregate;
    println!(
        "MEAN AR {:.4} ± {:.4} (3σ)  MAX AR {:.4}  completed {}/{}",
        a.mean_ar,
        a.three_sigma,
        a.max_ar,
        a.completed,
        a.completed + a.failed
    );

    if record.any_completed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
