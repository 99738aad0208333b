//! End-to-end runs: load or generate an instance, solve it once per seed with a direct
//! or multilevel pipeline, score against reference extrema and export plot data.

mod config;
mod instance;
mod plot;
mod run;

pub use config::{InputFormat, InstanceSource, Pipeline, ReferenceSource, RunConfig};
pub use instance::{generate_instance, InstanceKind};
pub use plot::{emit_plot_data, metrics_csv, trace_csv, METRICS_FILE, METRICS_HEADER, TRACE_FILE, TRACE_HEADER};
pub use run::{compute_reference, run, run_loaded, sidecar_path, Aggregate, LoadedProblem, Reference, RunRecord};
pub use run::{SeedRecord, Sidecar, TracePoint};
