//! Black-box parameter search over mixed continuous/categorical spaces: uniform random
//! search and a tree-structured Parzen estimator (TPE). Lower objective is better.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Dimension {
    Continuous { name: String, low: f64, high: f64 },
    Categorical { name: String, options: usize },
}

impl Dimension {
    pub fn name(&self) -> &str {
        match self {
            Self::Continuous { name, .. } | Self::Categorical { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    dims: Vec<Dimension>,
}

impl SearchSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn continuous(mut self, name: &str, low: f64, high: f64) -> Result<Self> {
        if !low.is_finite() || !high.is_finite() || low >= high {
            return Err(Error::InvalidConfig(format!("bad bounds [{low}, {high}] for '{name}'")));
        }
        self.dims.push(Dimension::Continuous { name: name.into(), low, high });
        Ok(self)
    }

    pub fn categorical(mut self, name: &str, options: usize) -> Result<Self> {
        if options == 0 {
            return Err(Error::InvalidConfig(format!("'{name}' has no options")));
        }
        self.dims.push(Dimension::Categorical { name: name.into(), options });
        Ok(self)
    }

    pub fn dims(&self) -> &[Dimension] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.0.len() == self.dims.len()
            && self.dims.iter().zip(&p.0).all(|(d, v)| match (d, v) {
                (Dimension::Continuous { low, high, .. }, Value::Float(x)) => (*low..=*high).contains(x),
                (Dimension::Categorical { options, .. }, Value::Choice(c)) => c < options,
                _ => false,
            })
    }

    fn sample_uniform<R: Rng>(&self, rng: &mut R) -> Point {
        Point(
            self.dims
                .iter()
                .map(|d| match d {
                    Dimension::Continuous { low, high, .. } => Value::Float(rng.random_range(*low..=*high)),
                    Dimension::Categorical { options, .. } => Value::Choice(rng.random_range(0..*options)),
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Value {
    Float(f64),
    Choice(usize),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Float(x) => write!(f, "{x}"),
            Value::Choice(c) => write!(f, "{c}"),
        }
    }
}

/// One coordinate per dimension of the space it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point(pub Vec<Value>);

impl Point {
    /// Continuous coordinate `i`. Panics if the dimension is categorical.
    pub fn float(&self, i: usize) -> f64 {
        match self.0[i] {
            Value::Float(x) => x,
            Value::Choice(_) => panic!("dimension {i} is categorical"),
        }
    }

    /// Categorical coordinate `i`. Panics if the dimension is continuous.
    pub fn choice(&self, i: usize) -> usize {
        match self.0[i] {
            Value::Choice(c) => c,
            Value::Float(_) => panic!("dimension {i} is continuous"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub point: Point,
    pub value: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct History {
    trials: Vec<TrialRecord>,
}

impl History {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn report(&mut self, point: Point, value: f64) {
        self.trials.push(TrialRecord { point, value });
    }

    pub fn trials(&self) -> &[TrialRecord] {
        &self.trials
    }

    pub fn len(&self) -> usize {
        self.trials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trials.is_empty()
    }

    /// Lowest value; the earliest trial wins ties.
    pub fn best(&self) -> Option<&TrialRecord> {
        self.trials.iter().fold(None, |b: Option<&TrialRecord>, t| match b {
            Some(b) if b.value <= t.value => Some(b),
            _ => Some(t),
        })
    }

    /// CSV with header `trial,<dim names...>,value`.
    pub fn to_csv(&self, space: &SearchSpace) -> String {
        let mut out = String::from("trial");
        for d in space.dims() {
            out.push(',');
            out.push_str(d.name());
        }
        out.push_str(",value\n");
        for (k, t) in self.trials.iter().enumerate() {
            write!(out, "{k}").unwrap();
            for v in &t.point.0 {
                write!(out, ",{v}").unwrap();
            }
            writeln!(out, ",{}", t.value).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TpeParams {
    pub n_startup: usize,
    pub quantile: f64,
    pub n_candidates: usize,
}

impl Default for TpeParams {
    fn default() -> Self {
        Self { n_startup: 10, quantile: 0.25, n_candidates: 24 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Random,
    Tpe(TpeParams),
}

impl Strategy {
    pub fn tpe() -> Self {
        Self::Tpe(TpeParams::default())
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Random => "random",
            Self::Tpe(_) => "tpe",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Self::Random),
            "tpe" => Ok(Self::tpe()),
            _ => Err(Error::UnknownName(format!("optimizer strategy '{s}'"))),
        }
    }
}

/// Next point to evaluate. Deterministic in (history, space, strategy, seed).
pub fn suggest(history: &History, space: &SearchSpace, strategy: &Strategy, seed: u64) -> Point {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match strategy {
        Strategy::Tpe(p) if history.len() >= p.n_startup.max(2) => tpe_suggest(history, space, p, &mut rng),
        _ => space.sample_uniform(&mut rng),
    }
}

struct Parzen {
    low: f64,
    high: f64,
    centers: Vec<f64>,
    bw: f64,
}

impl Parzen {
    fn fit(low: f64, high: f64, xs: Vec<f64>) -> Self {
        let range = high - low;
        let m = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / m;
        let std = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / m).sqrt();
        let scott = 1.06 * std * m.powf(-0.2);
        // floor keeps the model from collapsing onto a cluster of near-identical trials
        let floor = range / (m + 1.0).min(100.0);
        Self { low, high, centers: xs, bw: scott.clamp(floor, range) }
    }

    /// Mixture of a uniform prior (one share) and one Gaussian per center.
    fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        let k = rng.random_range(0..=self.centers.len());
        if k == self.centers.len() {
            return rng.random_range(self.low..=self.high);
        }
        let normal = Normal::new(self.centers[k], self.bw).unwrap();
        for _ in 0..64 {
            let x = normal.sample(rng);
            if (self.low..=self.high).contains(&x) {
                return x;
            }
        }
        self.centers[k].clamp(self.low, self.high)
    }

    fn log_density(&self, x: f64) -> f64 {
        let w = 1.0 / (self.centers.len() + 1) as f64;
        let norm = 1.0 / (self.bw * (2.0 * std::f64::consts::PI).sqrt());
        let kernels: f64 = self.centers.iter().map(|c| norm * (-0.5 * ((x - c) / self.bw).powi(2)).exp()).sum();
        (w * (kernels + 1.0 / (self.high - self.low))).ln()
    }
}

fn category_probs(options: usize, picks: impl Iterator<Item = usize>) -> Vec<f64> {
    let mut counts = vec![1.0; options];
    for c in picks {
        counts[c] += 1.0;
    }
    let total: f64 = counts.iter().sum();
    counts.into_iter().map(|c| c / total).collect()
}

fn tpe_suggest<R: Rng>(history: &History, space: &SearchSpace, p: &TpeParams, rng: &mut R) -> Point {
    let mut sorted: Vec<&TrialRecord> = history.trials().iter().collect();
    sorted.sort_by(|a, b| a.value.total_cmp(&b.value));
    let n_good = ((p.quantile * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len() - 1);
    let (good, bad) = sorted.split_at(n_good);

    let mut candidates: Vec<(Vec<Value>, f64)> = (0..p.n_candidates.max(1)).map(|_| (Vec::new(), 0.0)).collect();
    for (d, dim) in space.dims().iter().enumerate() {
        match dim {
            Dimension::Continuous { low, high, .. } => {
                let coords = |set: &[&TrialRecord]| set.iter().map(|t| t.point.float(d)).collect::<Vec<_>>();
                let l = Parzen::fit(*low, *high, coords(good));
                let g = Parzen::fit(*low, *high, coords(bad));
                for (vals, score) in candidates.iter_mut() {
                    let x = l.sample(rng);
                    *score += l.log_density(x) - g.log_density(x);
                    vals.push(Value::Float(x));
                }
            }
            Dimension::Categorical { options, .. } => {
                let l = category_probs(*options, good.iter().map(|t| t.point.choice(d)));
                let g = category_probs(*options, bad.iter().map(|t| t.point.choice(d)));
                for (vals, score) in candidates.iter_mut() {
                    let u: f64 = rng.random();
                    let mut acc = 0.0;
                    let mut c = options - 1;
                    for (k, pk) in l.iter().enumerate() {
                        acc += pk;
                        if u < acc {
                            c = k;
                            break;
                        }
                    }
                    *score += l[c].ln() - g[c].ln();
                    vals.push(Value::Choice(c));
                }
            }
        }
    }
    let best = candidates
        .into_iter()
        .fold(None, |b: Option<(Vec<Value>, f64)>, c| match b {
            Some(b) if b.1 >= c.1 => Some(b),
            _ => Some(c),
        })
        .unwrap();
    Point(best.0)
}

/// Sequential ask/tell loop around [`suggest`].
#[derive(Debug, Clone)]
pub struct Optimizer {
    pub space: SearchSpace,
    pub strategy: Strategy,
    pub history: History,
    seed: u64,
}

impl Optimizer {
    pub fn new(space: SearchSpace, strategy: Strategy, seed: u64) -> Self {
        Self { space, strategy, history: History::new(), seed }
    }

    pub fn ask(&self) -> Point {
        let trial_seed = self.seed ^ (self.history.len() as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        suggest(&self.history, &self.space, &self.strategy, trial_seed)
    }

    pub fn tell(&mut self, point: Point, value: f64) {
        self.history.report(point, value);
    }

    /// Runs `trials` evaluations of `f` and returns the best record.
    pub fn minimize<F: FnMut(&Point) -> f64>(&mut self, trials: usize, mut f: F) -> Option<&TrialRecord> {
        for _ in 0..trials {
            let p = self.ask();
            let v = f(&p);
            self.tell(p, v);
        }
        self.history.best()
    }
}
