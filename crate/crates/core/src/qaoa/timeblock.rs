use std::collections::HashMap;

use super::swap_network::{swap_network_layers, validate_ordering};
use crate::error::{Error, Result};
use crate::problem::IsingHamiltonian;

/// Terms applied jointly under one phase angle.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Block {
    pub couplings: Vec<(usize, usize, f64)>,
    pub fields: Vec<(usize, f64)>,
}

impl Block {
    pub fn is_empty(&self) -> bool {
        self.couplings.is_empty() && self.fields.is_empty()
    }
}

/// Split of a Hamiltonian into blocks of `k` consecutive swap-network layers.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeBlockPartition {
    pub k: usize,
    pub blocks: Vec<Block>,
}

impl TimeBlockPartition {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// Block `b` holds the couplings whose pair meets in layers `[b k, (b+1) k)`; all local
/// fields go to the first block. Blocks without terms are kept.
pub fn build_timeblock_partition(h: &IsingHamiltonian, k: usize, ordering: &[usize]) -> Result<TimeBlockPartition> {
    let n = h.n();
    if k < 1 || k > n.max(1) {
        return Err(Error::InvalidConfig(format!("block depth k={k} outside 1..={n}")));
    }
    validate_ordering(n, ordering)?;
    let fields: Vec<(usize, f64)> = h.fields().iter().copied().enumerate().filter(|&(_, v)| v != 0.0).collect();
    if n < 2 {
        return Ok(TimeBlockPartition { k, blocks: vec![Block { couplings: Vec::new(), fields }] });
    }
    let layers = swap_network_layers(n, ordering)?;
    let mut layer_of = HashMap::new();
    for (l, layer) in layers.iter().enumerate() {
        for &(a, b) in layer {
            layer_of.insert((a.min(b), a.max(b)), l);
        }
    }
    let mut blocks = vec![Block::default(); n.div_ceil(k)];
    for &(i, j, v) in h.couplings() {
        blocks[layer_of[&(i, j)] / k].couplings.push((i, j, v));
    }
    blocks[0].fields = fields;
    Ok(TimeBlockPartition { k, blocks })
}
