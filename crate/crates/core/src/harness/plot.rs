use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::RunRecord;
use crate::error::Result;
use crate::problem::{approximation_ratio, Sense};

pub const TRACE_FILE: &str = "ar_vs_iteration.csv";
pub const TRACE_HEADER: &str = "instance,pipeline,seed,iteration,stage,cut,ar";
pub const METRICS_FILE: &str = "pipeline_metrics.csv";
pub const METRICS_HEADER: &str = "instance,pipeline,seed,jaccard,ar,calls";

/// Quality trajectory rows: one per trace point of every completed seed.
pub fn trace_csv(records: &[RunRecord]) -> String {
    let mut out = format!("{TRACE_HEADER}\n");
    for r in records {
        for s in r.seeds.iter().filter(|s| s.completed()) {
            for t in &s.trace {
                let ar = approximation_ratio(t.cut, r.reference.c_min, r.reference.c_max, Sense::Maximize);
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.instance, r.config.pipeline, s.seed, t.iteration, t.stage, t.cut, ar
                )
                .unwrap();
            }
        }
    }
    out
}

/// Per-seed (Jaccard, AR, subsolver calls); Jaccard is empty without a reference solution.
pub fn metrics_csv(records: &[RunRecord]) -> String {
    let mut out = format!("{METRICS_HEADER}\n");
    for r in records {
        for s in r.seeds.iter().filter(|s| s.completed()) {
            let j = s.jaccard.map(|j| j.to_string()).unwrap_or_default();
            writeln!(out, "{},{},{},{},{},{}", r.instance, r.config.pipeline, s.seed, j, s.ar, s.subsolver_calls)
                .unwrap();
        }
    }
    out
}

/// Writes both plot-data files into `dir`, replacing earlier versions.
pub fn emit_plot_data(records: &[RunRecord], dir: &Path) -> Result<(PathBuf, PathBuf)> {
    std::fs::create_dir_all(dir)?;
    let a = dir.join(TRACE_FILE);
    let b = dir.join(METRICS_FILE);
    std::fs::write(&a, trace_csv(records))?;
    std::fs::write(&b, metrics_csv(records))?;
    Ok((a, b))
}
