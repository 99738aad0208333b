use serde::{Deserialize, Serialize};

use super::Bitstring;
use crate::error::{Error, Result};

/// Bit-flip (spin-reversal) gauge. Composition is entrywise XOR.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaugeVector(Vec<u8>);

impl GaugeVector {
    pub fn identity(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidProblem("gauge entries must be 0 or 1".into()));
        }
        Ok(Self(bits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn compose(&self, other: &GaugeVector) -> Result<Self> {
        crate::error::check_len(self.len(), other.len())?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect()))
    }

    /// Maps a bitstring between frames (`x -> x XOR g`); its own inverse.
    pub fn transform(&self, x: &Bitstring) -> Result<Bitstring> {
        x.xor(&self.as_bitstring())
    }

    pub fn as_bitstring(&self) -> Bitstring {
        Bitstring::new(self.0.clone()).expect("gauge bits are binary")
    }
}

impl From<&Bitstring> for GaugeVector {
    fn from(x: &Bitstring) -> Self {
        Self(x.bits().to_vec())
    }
}
