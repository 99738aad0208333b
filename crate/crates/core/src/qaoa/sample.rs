use std::collections::BTreeMap;
use std::fmt::Write as _;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::state::StateVector;
use crate::error::{Error, Result};
use crate::problem::Bitstring;

/// Terminal attractor channel: every measured 1 is reset to 0 with probability `p_damp`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct NoiseConfig {
    pub p_damp: f64,
}

impl NoiseConfig {
    pub fn new(p_damp: f64) -> Result<Self> {
        let c = Self { p_damp };
        c.validate()?;
        Ok(c)
    }

    pub fn noiseless() -> Self {
        Self { p_damp: 0.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p_damp) {
            return Err(Error::InvalidConfig(format!("p_damp {} outside [0, 1]", self.p_damp)));
        }
        Ok(())
    }
}

/// Measurement outcomes keyed by bitstring.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    n: usize,
    counts: BTreeMap<Bitstring, u64>,
    shots: u64,
}

impl SampleSet {
    pub fn from_counts(n: usize, counts: impl IntoIterator<Item = (Bitstring, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut shots = 0;
        for (x, c) in counts {
            if x.len() != n {
                return Err(Error::LengthMismatch { expected: n, actual: x.len() });
            }
            if c > 0 {
                *map.entry(x).or_insert(0) += c;
                shots += c;
            }
        }
        Ok(Self { n, counts: map, shots })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn counts(&self) -> &BTreeMap<Bitstring, u64> {
        &self.counts
    }

    pub fn count(&self, x: &Bitstring) -> u64 {
        self.counts.get(x).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bitstring, u64)> {
        self.counts.iter().map(|(x, &c)| (x, c))
    }

    /// Sample with the lowest `energy`; ties go to the lexicographically smallest.
    pub fn best_by<F: FnMut(&Bitstring) -> f64>(&self, mut energy: F) -> Option<(Bitstring, f64)> {
        let mut best: Option<(Bitstring, f64)> = None;
        for x in self.counts.keys() {
            let e = energy(x);
            if best.as_ref().is_none_or(|(_, b)| e < *b) {
                best = Some((x.clone(), e));
            }
        }
        best
    }

    /// One `bitstring count` line per distinct outcome.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (x, c) in &self.counts {
            writeln!(out, "{x} {c}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut n = None;
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: k + 1, msg: msg.to_string() };
            let mut it = line.split_whitespace();
            let x: Bitstring =
                it.next().ok_or_else(|| err("missing bitstring"))?.parse().map_err(|_| err("bad bitstring"))?;
            let c: u64 = it.next().ok_or_else(|| err("missing count"))?.parse().map_err(|_| err("bad count"))?;
            if *n.get_or_insert(x.len()) != x.len() {
                return Err(err("inconsistent bitstring length"));
            }
            rows.push((x, c));
        }
        Self::from_counts(n.unwrap_or(0), rows)
    }
}

/// Draws `shots` outcomes from `|amp|^2` and passes each through the attractor channel.
pub fn sample(state: &StateVector, shots: u64, noise: &NoiseConfig, seed: u64) -> Result<SampleSet> {
    if shots == 0 {
        return Err(Error::InvalidConfig("shots must be at least 1".into()));
    }
    noise.validate()?;
    let n = state.n();
    let mut cdf = Vec::with_capacity(1 << n);
    let mut acc = 0.0;
    for p in state.probabilities() {
        acc += p;
        cdf.push(acc);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw: BTreeMap<usize, u64> = BTreeMap::new();
    for _ in 0..shots {
        let u = rng.random::<f64>() * acc;
        let mut idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
        if noise.p_damp > 0.0 {
            for q in 0..n {
                if idx >> q & 1 == 1 && rng.random::<f64>() < noise.p_damp {
                    idx &= !(1 << q);
                }
            }
        }
        *raw.entry(idx).or_insert(0) += 1;
    }
    SampleSet::from_counts(n, raw.into_iter().map(|(idx, c)| (Bitstring::from_mask(idx as u64, n), c)))
}

/// Two-point spin correlations of the samples, unit diagonal.
pub fn correlation_matrix(samples: &SampleSet) -> Result<DMatrix<f64>> {
    if samples.shots() == 0 {
        return Err(Error::InvalidConfig("correlation of an empty sample set".into()));
    }
    let n = samples.n();
    let mut m = DMatrix::zeros(n, n);
    for (x, c) in samples.iter() {
        let s = x.spins();
        for i in 0..n {
            for j in i + 1..n {
                m[(i, j)] += c as f64 * s[i] * s[j];
            }
        }
    }
    m /= samples.shots() as f64;
    Ok(symmetrize_unit(m))
}

/// Correlations of the exact output distribution.
pub fn exact_correlation_matrix(state: &StateVector) -> DMatrix<f64> {
    let n = state.n();
    let mut m = DMatrix::zeros(n, n);
    for (idx, p) in state.probabilities().into_iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        for i in 0..n {
            let si = 1.0 - 2.0 * ((idx >> i) & 1) as f64;
            for j in i + 1..n {
                let sj = 1.0 - 2.0 * ((idx >> j) & 1) as f64;
                m[(i, j)] += p * si * sj;
            }
        }
    }
    symmetrize_unit(m)
}

fn symmetrize_unit(mut m: DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    for i in 0..n {
        m[(i, i)] = 1.0;
        for j in i + 1..n {
            m[(j, i)] = m[(i, j)];
        }
    }
    m
}
