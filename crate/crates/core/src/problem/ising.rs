use std::collections::HashSet;

use super::{Adjacency, Bitstring, GaugeVector, Problem, Representation, Sense};
use crate::error::{check_len, Error, Result};

/// `H = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j + constant` with `s_i = 1 - 2 x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingHamiltonian {
    h: Vec<f64>,
    /// Strictly upper triangular, sorted by `(i, j)`, zero couplings dropped.
    couplings: Vec<(usize, usize, f64)>,
    constant: f64,
    adj: Adjacency,
}

impl IsingHamiltonian {
    pub fn new(h: Vec<f64>, couplings: impl IntoIterator<Item = (usize, usize, f64)>, constant: f64) -> Result<Self> {
        let n = h.len();
        if h.iter().any(|v| !v.is_finite()) || !constant.is_finite() {
            return Err(Error::InvalidProblem("non-finite field or constant".into()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b, j) in couplings {
            if a >= n || b >= n {
                return Err(Error::NodeOutOfRange { node: a.max(b), n });
            }
            if a == b {
                return Err(Error::InvalidProblem(format!("diagonal coupling at {a}")));
            }
            if !j.is_finite() {
                return Err(Error::InvalidProblem(format!("non-finite coupling ({a},{b})")));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if !seen.insert(key) {
                return Err(Error::InvalidProblem(format!("duplicate coupling {key:?}")));
            }
            if j != 0.0 {
                out.push((key.0, key.1, j));
            }
        }
        out.sort_by_key(|&(i, j, _)| (i, j));
        Ok(Self::from_parts(h, out, constant))
    }

    fn from_parts(h: Vec<f64>, couplings: Vec<(usize, usize, f64)>, constant: f64) -> Self {
        let adj = Adjacency::from_edges(h.len(), couplings.iter().copied());
        Self { h, couplings, constant, adj }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_parts(vec![0.0; n], Vec::new(), 0.0)
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn fields(&self) -> &[f64] {
        &self.h
    }

    pub fn couplings(&self) -> &[(usize, usize, f64)] {
        &self.couplings
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        self.adj.neighbors(i)
    }

    pub fn coupling(&self, i: usize, j: usize) -> f64 {
        let key = if i < j { (i, j) } else { (j, i) };
        self.couplings.binary_search_by(|&(a, b, _)| (a, b).cmp(&key)).map(|k| self.couplings[k].2).unwrap_or(0.0)
    }

    pub fn has_fields(&self) -> bool {
        self.h.iter().any(|&v| v != 0.0)
    }

    pub fn with_constant(&self, constant: f64) -> Self {
        Self { constant, ..self.clone() }
    }

    /// Energy including the constant.
    pub fn eval(&self, x: &Bitstring) -> Result<f64> {
        check_len(self.n(), x.len())?;
        Ok(self.eval_spins(&x.spins()))
    }

    pub(crate) fn eval_spins(&self, s: &[f64]) -> f64 {
        let fields: f64 = self.h.iter().zip(s).map(|(h, s)| h * s).sum();
        let pairs: f64 = self.couplings.iter().map(|&(i, j, v)| v * s[i] * s[j]).sum();
        fields + pairs + self.constant
    }

    /// `h_i + sum_j J_ij s_j`; flipping spin `i` changes the energy by `-2 s_i * local_field(i)`.
    #[inline]
    pub fn local_field(&self, i: usize, s: &[f64]) -> f64 {
        self.h[i] + self.adj.neighbors(i).iter().map(|&(j, v)| v * s[j]).sum::<f64>()
    }

    /// Spin-reversal transform: `h'_i = g~_i h_i`, `J'_ij = g~_i g~_j J_ij` with `g~ = 1 - 2g`.
    /// Satisfies `H(x) == H^g(x XOR g)`.
    pub fn apply_gauge(&self, g: &GaugeVector) -> Result<Self> {
        check_len(self.n(), g.len())?;
        let sign = |i: usize| if g.get(i) == 1 { -1.0 } else { 1.0 };
        let h = self.h.iter().enumerate().map(|(i, &v)| sign(i) * v).collect();
        let couplings = self.couplings.iter().map(|&(i, j, v)| (i, j, sign(i) * sign(j) * v)).collect();
        Ok(Self::from_parts(h, couplings, self.constant))
    }
}

impl Problem for IsingHamiltonian {
    fn num_vars(&self) -> usize {
        self.n()
    }

    fn sense(&self) -> Sense {
        Sense::Minimize
    }

    fn representation(&self) -> Representation {
        Representation::Ising
    }

    fn evaluate(&self, x: &Bitstring) -> Result<f64> {
        self.eval(x)
    }

    fn to_energy_form(&self) -> IsingHamiltonian {
        self.clone()
    }
}
