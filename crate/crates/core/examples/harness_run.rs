//! A QUBO file through the run harness: direct and multilevel pipelines, aggregates, and
//! plot data written to a temporary directory.

use mlvl::harness::{emit_plot_data, run, InputFormat, InstanceSource, RunConfig};
use mlvl::problem::io::write_qubo;
use mlvl::problem::QuboProblem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> mlvl::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let n = 60;
    let mut terms = Vec::new();
    for i in 0..n {
        terms.push((i, i, rng.random_range(-1.0..1.0)));
        for j in i + 1..n {
            if rng.random::<f64>() < 0.1 {
                terms.push((i, j, rng.random_range(-1.0..1.0)));
            }
        }
    }
    let q = QuboProblem::new(n, terms)?;
    let dir = std::env::temp_dir().join("mlvl_harness_example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("random60.qubo");
    write_qubo(&path, &q)?;

    let mut records = Vec::new();
    for pipeline in ["greedy", "sa", "mlvl-sa", "mlvl-tabu"] {
        let mut cfg =
            RunConfig::new(InstanceSource::File { path: path.clone(), format: InputFormat::Qubo }, pipeline.parse()?);
        cfg.seeds = (0..5).collect();
        cfg.mss = 15;
        let rec = run(&cfg)?;
        let a = &rec.aggregate;
        println!(
            "{pipeline:>10}: MEAN AR {:.4} ± {:.4}  MAX AR {:.4}  mean calls {:.1}",
            a.mean_ar, a.three_sigma, a.max_ar, a.mean_calls
        );
        records.push(rec);
    }
    println!("reference: {}", records[0].reference.method);
    let (a, b) = emit_plot_data(&records, &dir)?;
    println!("wrote {} and {}", a.display(), b.display());
    Ok(())
}
