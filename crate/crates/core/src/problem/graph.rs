use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Adjacency, Bitstring, IsingHamiltonian, Problem, Representation, Sense};
use crate::error::{check_len, Error, Result};

/// Weighted undirected edge, stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub w: f64,
}

/// Max-Cut instance: maximize the total weight of edges whose endpoints differ.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxCutGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Adjacency,
}

impl MaxCutGraph {
    /// Validates and normalizes an edge list. Zero weights are dropped; self-loops,
    /// repeated pairs and non-finite weights are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b, w) in edges {
            if a >= n || b >= n {
                return Err(Error::NodeOutOfRange { node: a.max(b), n });
            }
            if a == b {
                return Err(Error::InvalidProblem(format!("self-loop at node {a}")));
            }
            if !w.is_finite() {
                return Err(Error::InvalidProblem(format!("non-finite weight on ({a},{b})")));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((i, j)) {
                return Err(Error::InvalidProblem(format!("duplicate edge ({i},{j})")));
            }
            if w != 0.0 {
                out.push(Edge { i, j, w });
            }
        }
        out.sort_by_key(|e| (e.i, e.j));
        Ok(Self::from_sorted(n, out))
    }

    /// Sums weights of repeated pairs before building; used by coarsening and conversions.
    pub fn from_accumulated(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut acc: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (a, b, w) in edges {
            if a >= n || b >= n {
                return Err(Error::NodeOutOfRange { node: a.max(b), n });
            }
            if a == b {
                continue;
            }
            let key = if a < b { (a, b) } else { (b, a) };
            *acc.entry(key).or_insert(0.0) += w;
        }
        let edges = acc.into_iter().filter(|&(_, w)| w != 0.0).map(|((i, j), w)| Edge { i, j, w }).collect();
        Ok(Self::from_sorted(n, edges))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let adj = Adjacency::from_edges(n, edges.iter().map(|e| (e.i, e.j, e.w)));
        Self { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        self.adj.neighbors(i)
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges.binary_search_by(|e| (e.i, e.j).cmp(&(a, b))).map(|k| self.edges[k].w).unwrap_or(0.0)
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    pub fn total_abs_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w.abs()).sum()
    }

    /// Sum of `w` over edges with differing endpoint bits.
    pub fn cut(&self, x: &Bitstring) -> Result<f64> {
        check_len(self.n, x.len())?;
        let b = x.bits();
        Ok(self.edges.iter().filter(|e| b[e.i] != b[e.j]).map(|e| e.w).sum())
    }

    /// Indices (into [`edges`](Self::edges)) of the edges crossing the cut.
    pub fn cut_edges(&self, x: &Bitstring) -> Result<Vec<usize>> {
        check_len(self.n, x.len())?;
        let b = x.bits();
        Ok(self.edges.iter().enumerate().filter(|(_, e)| b[e.i] != b[e.j]).map(|(k, _)| k).collect())
    }

    /// Same topology, each weight replaced by a uniform draw from [-1, 1].
    pub fn randomize_weights(&self, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                // a zero draw would delete the edge; redraw keeps the topology
                let mut w = 0.0;
                while w == 0.0 {
                    w = rng.random_range(-1.0..=1.0);
                }
                Edge { w, ..*e }
            })
            .collect();
        Self::from_sorted(self.n, edges)
    }
}

impl Problem for MaxCutGraph {
    fn num_vars(&self) -> usize {
        self.n
    }

    fn sense(&self) -> Sense {
        Sense::Maximize
    }

    fn representation(&self) -> Representation {
        Representation::MaxCut
    }

    fn evaluate(&self, x: &Bitstring) -> Result<f64> {
        self.cut(x)
    }

    fn to_energy_form(&self) -> IsingHamiltonian {
        // w [x_i != x_j] = w (1 - s_i s_j) / 2
        let couplings = self.edges.iter().map(|e| (e.i, e.j, -e.w / 2.0));
        IsingHamiltonian::new(vec![0.0; self.n], couplings, self.total_weight() / 2.0)
            .expect("valid graph gives a valid Ising form")
    }
}
