use crate::error::{check_len, Error, Result};
use crate::problem::{Bitstring, IsingHamiltonian, MaxCutGraph};

/// Ising model over a node subset with everything else frozen at a fixed assignment.
#[derive(Debug, Clone)]
pub struct Subproblem {
    /// Global node id of each local spin.
    pub nodes: Vec<usize>,
    pub hamiltonian: IsingHamiltonian,
}

impl Subproblem {
    /// Local assignment read off a global one.
    pub fn restrict(&self, x: &Bitstring) -> Bitstring {
        Bitstring::new(self.nodes.iter().map(|&v| x.get(v)).collect()).expect("binary")
    }

    /// Copy of `x` with the subset overwritten by `local`.
    pub fn patch(&self, x: &Bitstring, local: &Bitstring) -> Result<Bitstring> {
        check_len(self.nodes.len(), local.len())?;
        let mut out = x.clone();
        for (k, &v) in self.nodes.iter().enumerate() {
            out.set(v, local.get(k));
        }
        Ok(out)
    }
}

/// Builds an Ising model over `subset` whose energy is minus the global cut:
/// `H_sub(x_s) == -cut(g, assignment patched with x_s)` for every `x_s`.
///
/// Each edge contributes `w (1 - s_a s_b) / 2` to the cut, so internal edges give
/// `J = w/2`, boundary edges give a field `(w/2) s_frozen`, and all constant parts
/// (including the frozen-frozen cut) go to the constant.
pub fn extract_subproblem(g: &MaxCutGraph, assignment: &Bitstring, subset: &[usize]) -> Result<Subproblem> {
    check_len(g.n(), assignment.len())?;
    let mut local = vec![usize::MAX; g.n()];
    for (k, &v) in subset.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::NodeOutOfRange { node: v, n: g.n() });
        }
        if local[v] != usize::MAX {
            return Err(Error::InvalidProblem(format!("node {v} repeated in subset")));
        }
        local[v] = k;
    }
    let x = assignment.bits();
    let mut h = vec![0.0; subset.len()];
    let mut couplings = Vec::new();
    let mut constant = 0.0;
    let mut touching_cut = 0.0;
    for (k, &a) in subset.iter().enumerate() {
        for &(b, w) in g.neighbors(a) {
            let lb = local[b];
            if lb != usize::MAX {
                if a < b {
                    couplings.push((k, lb, w / 2.0));
                    constant -= w / 2.0;
                    if x[a] != x[b] {
                        touching_cut += w;
                    }
                }
            } else {
                let frozen_spin = 1.0 - 2.0 * x[b] as f64;
                h[k] += w / 2.0 * frozen_spin;
                constant -= w / 2.0;
                if x[a] != x[b] {
                    touching_cut += w;
                }
            }
        }
    }
    let frozen_cut = g.cut(assignment)? - touching_cut;
    constant -= frozen_cut;
    let hamiltonian = IsingHamiltonian::new(h, couplings, constant)?;
    Ok(Subproblem { nodes: subset.to_vec(), hamiltonian })
}
