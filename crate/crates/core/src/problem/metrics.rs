use std::collections::HashSet;

use super::{Bitstring, MaxCutGraph, Sense};
use crate::error::{check_len, Result};

/// Renormalized approximation ratio: 1 at the optimum, 0 at the worst assignment.
/// A degenerate spectrum (`c_max == c_min`) gives 1.0.
pub fn approximation_ratio(c: f64, c_min: f64, c_max: f64, sense: Sense) -> f64 {
    let span = c_max - c_min;
    if span.abs() <= 1e-12 {
        return 1.0;
    }
    match sense {
        Sense::Maximize => (c - c_min) / span,
        Sense::Minimize => (c_max - c) / span,
    }
}

/// Intersection over union of the cut-edge sets of two assignments; 1.0 when both are empty.
pub fn jaccard_cut_similarity(g: &MaxCutGraph, x1: &Bitstring, x2: &Bitstring) -> Result<f64> {
    check_len(g.n(), x1.len())?;
    check_len(g.n(), x2.len())?;
    let a: HashSet<usize> = g.cut_edges(x1)?.into_iter().collect();
    let b: HashSet<usize> = g.cut_edges(x2)?.into_iter().collect();
    let union = a.union(&b).count();
    if union == 0 {
        return Ok(1.0);
    }
    Ok(a.intersection(&b).count() as f64 / union as f64)
}
