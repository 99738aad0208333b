use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Problem, Representation};
use crate::error::{Error, Result};

/// Cost cached on a [`Bitstring`], tagged with the representation it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CachedCost {
    pub value: f64,
    pub repr: Representation,
}

/// Assignment over {0,1}. Equality and hashing look at the bits only.
#[derive(Debug, Clone, Default)]
pub struct Bitstring {
    bits: Vec<u8>,
    cost: Option<CachedCost>,
}

impl Bitstring {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidProblem(format!("bit value {b} not in {{0,1}}")));
        }
        Ok(Self { bits, cost: None })
    }

    pub fn zeros(n: usize) -> Self {
        Self { bits: vec![0; n], cost: None }
    }

    pub fn ones(n: usize) -> Self {
        Self { bits: vec![1; n], cost: None }
    }

    /// Bit `i` of the result is bit `i` of `mask`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        let bits = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
        Self { bits, cost: None }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let bits = (0..n).map(|_| rng.random_range(0..2u8)).collect();
        Self { bits, cost: None }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> u8 {
        self.bits[i]
    }

    /// Spin value `1 - 2 x_i`.
    pub fn spin(&self, i: usize) -> f64 {
        1.0 - 2.0 * self.bits[i] as f64
    }

    pub fn spins(&self) -> Vec<f64> {
        self.bits.iter().map(|&b| 1.0 - 2.0 * b as f64).collect()
    }

    pub fn set(&mut self, i: usize, v: u8) {
        debug_assert!(v <= 1);
        self.bits[i] = v;
        self.cost = None;
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] ^= 1;
        self.cost = None;
    }

    pub fn complement(&self) -> Self {
        Self { bits: self.bits.iter().map(|b| b ^ 1).collect(), cost: None }
    }

    pub fn xor(&self, other: &Bitstring) -> Result<Self> {
        crate::error::check_len(self.len(), other.len())?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect();
        Ok(Self { bits, cost: None })
    }

    pub fn hamming(&self, other: &Bitstring) -> usize {
        self.bits.iter().zip(&other.bits).filter(|(a, b)| a != b).count()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn cost(&self) -> Option<CachedCost> {
        self.cost
    }

    /// Evaluates on `problem` and caches the result.
    pub fn evaluated<P: Problem + ?Sized>(mut self, problem: &P) -> Result<Self> {
        let value = problem.evaluate(&self)?;
        self.cost = Some(CachedCost { value, repr: problem.representation() });
        Ok(self)
    }

    pub fn with_cost(mut self, value: f64, repr: Representation) -> Self {
        self.cost = Some(CachedCost { value, repr });
        self
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }
}

impl PartialEq for Bitstring {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Bitstring {}

impl Hash for Bitstring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for Bitstring {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic over (x_0, x_1, ...).
impl Ord for Bitstring {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            f.write_str(if *b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidProblem(format!("invalid bit character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Self { bits, cost: None })
    }
}

impl From<Vec<u8>> for Bitstring {
    /// Panics on values outside {0,1}; use [`Bitstring::new`] for untrusted input.
    fn from(bits: Vec<u8>) -> Self {
        Self::new(bits).expect("bits must be 0 or 1")
    }
}

impl Serialize for Bitstring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Bitstring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
