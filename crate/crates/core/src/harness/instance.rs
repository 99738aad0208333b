use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::MaxCutGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    /// Complete graph, weights uniform over {-1, +1}.
    SkInt,
    /// Complete graph, weights uniform in [0, 1].
    SkReal,
    /// Erdos-Renyi G(n, p) with weights uniform in [-1, 1].
    Gnp,
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SkInt => "sk_int",
            Self::SkReal => "sk_real",
            Self::Gnp => "gnp",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Self::SkInt, Self::SkReal, Self::Gnp]
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownName(format!("instance kind '{s}'")))
    }
}

/// Random benchmark graph. `p` is the edge probability and only used by `Gnp`.
pub fn generate_instance(kind: InstanceKind, n: usize, p: f64, seed: u64) -> Result<MaxCutGraph> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!("instances need at least 2 nodes, got {n}")));
    }
    if kind == InstanceKind::Gnp && !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidConfig(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let w = match kind {
                InstanceKind::SkInt => {
                    if rng.random::<bool>() {
                        1.0
                    } else {
                        -1.0
                    }
                }
                InstanceKind::SkReal => rng.random_range(0.0..=1.0),
                InstanceKind::Gnp => {
                    if rng.random::<f64>() >= p {
                        continue;
                    }
                    rng.random_range(-1.0..=1.0)
                }
            };
            edges.push((i, j, w));
        }
    }
    // exact zeros are dropped by the graph constructor
    MaxCutGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sk_int() {
        let g = generate_instance(InstanceKind::SkInt, 5, 0.0, 1).unwrap();
        assert_eq!(g.num_edges(), 10);
        assert!(g.edges().iter().all(|e| e.w == 1.0 || e.w == -1.0));
    }

    #[test]
    fn sk_real() {
        let g = generate_instance(InstanceKind::SkReal, 5, 0.0, 1).unwrap();
        assert_eq!(g.num_edges(), 10);
        assert!(g.edges().iter().all(|e| (0.0..=1.0).contains(&e.w)));
    }

    #[test]
    fn gnp() {
        assert_eq!(generate_instance(InstanceKind::Gnp, 100, 0.0, 1).unwrap().num_edges(), 0);
        let g = generate_instance(InstanceKind::Gnp, 100, 0.05, 1).unwrap();
        assert!((150..350).contains(&g.num_edges()));
        assert!(g.edges().iter().all(|e| (-1.0..=1.0).contains(&e.w)));
    }

    #[test]
    fn seeded() {
        let a = generate_instance(InstanceKind::SkInt, 8, 0.0, 3).unwrap();
        assert_eq!(a, generate_instance(InstanceKind::SkInt, 8, 0.0, 3).unwrap());
        assert!("er".parse::<InstanceKind>().is_err());
    }
}
