use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::InstanceKind;
use crate::classical::SubsolverBudget;
use crate::error::{Error, Result};
use crate::multilevel::{VCycleConfig, DEFAULT_EMBED_DIM, DEFAULT_EMBED_ITERS};
use crate::ndar::NdarConfig;
use crate::subsolver::SubsolverKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputFormat {
    /// Max-Cut edge list.
    Graph,
    Qubo,
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" | "maxcut" => Ok(Self::Graph),
            "qubo" => Ok(Self::Qubo),
            _ => Err(Error::UnknownName(format!("input format '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceSource {
    File { path: PathBuf, format: InputFormat },
    Generated { kind: InstanceKind, n: usize, p: f64, seed: u64 },
}

impl InstanceSource {
    /// Short label used in file names and plot data.
    pub fn label(&self) -> String {
        match self {
            Self::File { path, .. } => path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
            Self::Generated { kind, n, seed, .. } => format!("{kind}_n{n}_s{seed}"),
        }
    }
}

/// A subsolver applied to the whole problem, or inside a multilevel V-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pipeline {
    pub multilevel: bool,
    pub subsolver: SubsolverKind,
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multilevel {
            write!(f, "mlvl-{}", self.subsolver)
        } else {
            write!(f, "{}", self.subsolver)
        }
    }
}

impl FromStr for Pipeline {
    type Err = Error;

    /// `sa`, `tabu`, `greedy`, `bm2`, `ndar`, `brute`, or any of them prefixed by `mlvl-`.
    fn from_str(s: &str) -> Result<Self> {
        match s.strip_prefix("mlvl-") {
            Some(rest) => Ok(Self { multilevel: true, subsolver: rest.parse()? }),
            None => Ok(Self { multilevel: false, subsolver: s.parse()? }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceSource {
    /// Enumeration when small enough, else the input's `.ref.json` sidecar when present,
    /// else long annealing runs.
    Auto,
    BruteForce,
    /// JSON sidecar with `best` (and optionally `worst`, `solution`) in the input's frame.
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub source: InstanceSource,
    pub pipeline: Pipeline,
    pub mss: usize,
    pub mur: usize,
    pub coarsest_size: usize,
    pub embed_dim: usize,
    pub embed_iters: usize,
    pub budget: SubsolverBudget,
    pub ndar: NdarConfig,
    pub seeds: Vec<u64>,
    pub reference: ReferenceSource,
}

impl RunConfig {
    pub fn new(source: InstanceSource, pipeline: Pipeline) -> Self {
        Self {
            source,
            pipeline,
            mss: 20,
            mur: 3,
            coarsest_size: 20,
            embed_dim: DEFAULT_EMBED_DIM,
            embed_iters: DEFAULT_EMBED_ITERS,
            budget: SubsolverBudget::default(),
            ndar: NdarConfig::default(),
            seeds: vec![0],
            reference: ReferenceSource::Auto,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(Error::InvalidConfig("no seeds given".into()));
        }
        if let InstanceSource::File { path, .. } = &self.source {
            if !path.exists() {
                return Err(Error::InvalidConfig(format!("input {} does not exist", path.display())));
            }
        }
        if let ReferenceSource::File(path) = &self.reference {
            if !path.exists() {
                return Err(Error::InvalidConfig(format!("reference {} does not exist", path.display())));
            }
        }
        if self.pipeline.multilevel {
            self.vcycle(0).refinement.validate()?;
            if self.coarsest_size < 2 {
                return Err(Error::InvalidConfig("coarsest size must be at least 2".into()));
            }
        }
        if self.pipeline.subsolver == SubsolverKind::Ndar {
            self.ndar.validate()?;
        } else {
            self.budget.validate()?;
        }
        Ok(())
    }

    pub fn vcycle(&self, seed: u64) -> VCycleConfig {
        let mut v = VCycleConfig::new(self.mss, self.mur, seed);
        v.coarsest_size = self.coarsest_size;
        v.embed_dim = self.embed_dim;
        v.embed_iters = self.embed_iters;
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipeline_names() {
        for s in ["sa", "tabu", "greedy", "bm2", "ndar", "mlvl-sa", "mlvl-ndar"] {
            assert_eq!(s.parse::<Pipeline>().unwrap().to_string(), s);
        }
        assert!("mlvl-".parse::<Pipeline>().is_err());
        assert!("qaoa".parse::<Pipeline>().is_err());
    }

    #[test]
    fn config_json_round_trip() {
        let src = InstanceSource::Generated { kind: InstanceKind::SkInt, n: 10, p: 0.0, seed: 1 };
        let cfg = RunConfig::new(src, "mlvl-sa".parse().unwrap());
        let back: RunConfig = serde_json::from_str(&serde_json::to_string(&cfg).unwrap()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn validation() {
        let src = InstanceSource::File { path: "/nonexistent/graph.txt".into(), format: InputFormat::Graph };
        assert!(RunConfig::new(src, "sa".parse().unwrap()).validate().is_err());
        let src = InstanceSource::Generated { kind: InstanceKind::SkInt, n: 10, p: 0.0, seed: 1 };
        let mut cfg = RunConfig::new(src, "mlvl-sa".parse().unwrap());
        cfg.mss = 1;
        assert!(cfg.validate().is_err());
    }
}
