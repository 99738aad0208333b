//! Conversions between the three problem representations.
//!
//! Every [`ConversionRecord`] relates costs through
//! `maxcut_value = scale * other_value + offset`, where "other" is the QUBO or Ising side.

use serde::{Deserialize, Serialize};

use super::{Bitstring, IsingHamiltonian, MaxCutGraph, QuboProblem};
use crate::error::{check_len, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConversionKind {
    QuboToMaxCut,
    MaxCutToIsing,
    IsingToMaxCut,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConversionRecord {
    pub kind: ConversionKind,
    pub scale: f64,
    pub offset: f64,
    /// Index of the auxiliary node added by the conversion, if any.
    pub aux_node: Option<usize>,
}

impl ConversionRecord {
    pub fn maxcut_from_other(&self, other: f64) -> f64 {
        self.scale * other + self.offset
    }

    pub fn other_from_maxcut(&self, cut: f64) -> f64 {
        (cut - self.offset) / self.scale
    }
}

/// QUBO over `n` variables to Max-Cut over `n + 1` nodes; node `n` is the auxiliary node.
///
/// Off-diagonal `W_ij = -Q_ij`; auxiliary edges carry `2 Q_ii` plus every off-diagonal
/// entry touching `i` (row and column). With the auxiliary bit at 0 the cut equals
/// `2 * x^T Q x`.
pub fn qubo_to_maxcut(q: &QuboProblem) -> (MaxCutGraph, ConversionRecord) {
    let n = q.n();
    let mut aux = vec![0.0; n];
    let mut edges = Vec::with_capacity(q.terms().len() + n);
    for &(i, j, v) in q.terms() {
        if i == j {
            aux[i] += 2.0 * v;
        } else {
            edges.push((i, j, -v));
            aux[i] += v;
            aux[j] += v;
        }
    }
    edges.extend(aux.iter().enumerate().map(|(i, &w)| (i, n, w)));
    let graph = MaxCutGraph::from_accumulated(n + 1, edges).expect("indices in range");
    let record = ConversionRecord { kind: ConversionKind::QuboToMaxCut, scale: 2.0, offset: 0.0, aux_node: Some(n) };
    (graph, record)
}

/// `x_i = y_i XOR y_aux`, dropping the auxiliary node.
pub fn recover_qubo_solution(y: &Bitstring, rec: &ConversionRecord) -> Result<Bitstring> {
    recover_with_aux(y, rec)
}

fn recover_with_aux(y: &Bitstring, rec: &ConversionRecord) -> Result<Bitstring> {
    let aux = rec.aux_node.unwrap_or(y.len().saturating_sub(1));
    check_len(aux + 1, y.len())?;
    let flip = y.get(aux);
    let bits = y.bits()[..aux].iter().map(|b| b ^ flip).collect();
    Bitstring::new(bits)
}

/// `J = W`, `h = 0`: the Ising energy is `sum(W) - 2 cut`.
pub fn maxcut_to_ising(g: &MaxCutGraph) -> (IsingHamiltonian, ConversionRecord) {
    let h =
        IsingHamiltonian::new(vec![0.0; g.n()], g.edges().iter().map(|e| (e.i, e.j, e.w)), 0.0).expect("valid graph");
    let record = ConversionRecord {
        kind: ConversionKind::MaxCutToIsing,
        scale: -0.5,
        offset: g.total_weight() / 2.0,
        aux_node: None,
    };
    (h, record)
}

/// Field-carrying Ising to Max-Cut over `n + 1` nodes: each field becomes an edge to an
/// auxiliary node (`W_{i,aux} = h_i`), couplings map to `W = J`.
pub fn ising_to_maxcut(h: &IsingHamiltonian) -> (MaxCutGraph, ConversionRecord) {
    let n = h.n();
    let edges = h.couplings().iter().copied().chain(h.fields().iter().enumerate().map(|(i, &v)| (i, n, v)));
    let graph = MaxCutGraph::from_accumulated(n + 1, edges).expect("indices in range");
    let sum_w: f64 = h.couplings().iter().map(|c| c.2).sum::<f64>() + h.fields().iter().sum::<f64>();
    let record = ConversionRecord {
        kind: ConversionKind::IsingToMaxCut,
        scale: -0.5,
        offset: (sum_w + h.constant()) / 2.0,
        aux_node: Some(n),
    };
    (graph, record)
}

/// Inverse of [`ising_to_maxcut`] for assignments.
pub fn recover_ising_solution(y: &Bitstring, rec: &ConversionRecord) -> Result<Bitstring> {
    recover_with_aux(y, rec)
}
