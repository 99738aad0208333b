use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::swap_network::validate_ordering;
use super::timeblock::{build_timeblock_partition, Block, TimeBlockPartition};
use crate::error::{Error, Result};
use crate::problem::{Bitstring, IsingHamiltonian};

/// Largest register the statevector simulator accepts.
pub const MAX_QUBITS: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QaoaParams {
    pub gamma: Vec<f64>,
    pub beta: Vec<f64>,
    /// Position -> logical qubit of the swap network.
    pub ordering: Vec<usize>,
}

impl QaoaParams {
    pub fn new(gamma: Vec<f64>, beta: Vec<f64>, ordering: Vec<usize>) -> Result<Self> {
        let p = Self { gamma, beta, ordering };
        p.validate(p.ordering.len())?;
        Ok(p)
    }

    /// Depth-1 parameters with the identity ordering.
    pub fn single(gamma: f64, beta: f64, n: usize) -> Self {
        Self { gamma: vec![gamma], beta: vec![beta], ordering: (0..n).collect() }
    }

    pub fn depth(&self) -> usize {
        self.gamma.len()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.gamma.len() != self.beta.len() {
            return Err(Error::InvalidConfig(format!(
                "{} phase angles but {} mixer angles",
                self.gamma.len(),
                self.beta.len()
            )));
        }
        validate_ordering(n, &self.ordering)
    }
}

/// Amplitudes over the computational basis; bit `i` of the index is qubit `i`, and
/// `|1>` is spin -1 (bit value 1).
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    fn check_size(n: usize) -> Result<()> {
        if n > MAX_QUBITS {
            return Err(Error::TooLarge { n, limit: MAX_QUBITS });
        }
        Ok(())
    }

    pub fn plus(n: usize) -> Result<Self> {
        Self::check_size(n)?;
        let dim = 1usize << n;
        let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Ok(Self { n, amps: vec![a; dim] })
    }

    pub fn basis(x: &Bitstring) -> Result<Self> {
        let n = x.len();
        Self::check_size(n)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[basis_index(x)] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Normalizes the given amplitudes.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if !amps.len().is_power_of_two() {
            return Err(Error::InvalidConfig("amplitude count is not a power of two".into()));
        }
        let n = amps.len().trailing_zeros() as usize;
        Self::check_size(n)?;
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidConfig("state has zero or non-finite norm".into()));
        }
        Ok(Self { n, amps: amps.into_iter().map(|a| a / norm).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// |<self|other>|^2.
    pub fn fidelity(&self, other: &StateVector) -> f64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum::<Complex64>().norm_sqr()
    }

    /// Multiplies each amplitude by `exp(-i angle * diag[x])`.
    pub fn apply_phase(&mut self, diag: &[f64], angle: f64) {
        for (a, &d) in self.amps.iter_mut().zip(diag) {
            *a *= Complex64::from_polar(1.0, -angle * d);
        }
    }

    /// `exp(-i beta X)` on every qubit.
    pub fn apply_mixer(&mut self, beta: f64) {
        let (s, c) = beta.sin_cos();
        let ms = Complex64::new(0.0, -s);
        for q in 0..self.n {
            let bit = 1usize << q;
            for idx in 0..self.amps.len() {
                if idx & bit == 0 {
                    let a0 = self.amps[idx];
                    let a1 = self.amps[idx | bit];
                    self.amps[idx] = a0 * c + a1 * ms;
                    self.amps[idx | bit] = a0 * ms + a1 * c;
                }
            }
        }
    }
}

pub(crate) fn basis_index(x: &Bitstring) -> usize {
    x.bits().iter().enumerate().fold(0, |acc, (i, &b)| acc | ((b as usize) << i))
}

#[inline]
fn spin_of(idx: usize, i: usize) -> f64 {
    1.0 - 2.0 * ((idx >> i) & 1) as f64
}

fn block_diagonal(n: usize, block: &Block) -> Vec<f64> {
    (0..1usize << n)
        .map(|idx| {
            let c: f64 = block.couplings.iter().map(|&(i, j, v)| v * spin_of(idx, i) * spin_of(idx, j)).sum();
            let f: f64 = block.fields.iter().map(|&(i, v)| v * spin_of(idx, i)).sum();
            c + f
        })
        .collect()
}

/// Energy of every basis state, constant included.
pub fn diagonal_energies(h: &IsingHamiltonian) -> Result<Vec<f64>> {
    StateVector::check_size(h.n())?;
    let block = Block { couplings: h.couplings().to_vec(), fields: h.fields().iter().copied().enumerate().collect() };
    Ok(block_diagonal(h.n(), &block).into_iter().map(|e| e + h.constant()).collect())
}

/// Time-Block QAOA: layer `i` applies the phase of block `i mod m`, then the mixer.
/// The partition already encodes the ordering, so `params.ordering` is not consulted.
pub fn simulate_tbqaoa(h: &IsingHamiltonian, part: &TimeBlockPartition, params: &QaoaParams) -> Result<StateVector> {
    let n = h.n();
    StateVector::check_size(n)?;
    params.validate(params.ordering.len())?;
    if part.blocks.is_empty() {
        return Err(Error::InvalidConfig("empty partition".into()));
    }
    let mut state = StateVector::plus(n)?;
    let mut diags: Vec<Option<Vec<f64>>> = vec![None; part.blocks.len()];
    for (layer, (&gamma, &beta)) in params.gamma.iter().zip(&params.beta).enumerate() {
        let b = layer % part.blocks.len();
        let diag = diags[b].get_or_insert_with(|| block_diagonal(n, &part.blocks[b]));
        state.apply_phase(diag, gamma);
        state.apply_mixer(beta);
    }
    Ok(state)
}

/// Builds the partition from `params.ordering` and simulates.
pub fn simulate_qaoa(h: &IsingHamiltonian, k: usize, params: &QaoaParams) -> Result<StateVector> {
    params.validate(h.n())?;
    let part = build_timeblock_partition(h, k, &params.ordering)?;
    simulate_tbqaoa(h, &part, params)
}

pub fn exact_expectation(state: &StateVector, h: &IsingHamiltonian) -> Result<f64> {
    if state.n() != h.n() {
        return Err(Error::LengthMismatch { expected: h.n(), actual: state.n() });
    }
    let e = diagonal_energies(h)?;
    Ok(state.amps.iter().zip(&e).map(|(a, e)| a.norm_sqr() * e).sum())
}
