use crate::error::{check_len, Result};
use crate::problem::{Bitstring, IsingHamiltonian};

/// Best point of the closed Hamming-distance-2 ball around `x` (single pass). Returns
/// `x` unless something in the ball is strictly better.
pub fn hdqls(h: &IsingHamiltonian, x: &Bitstring) -> Result<Bitstring> {
    let n = h.n();
    check_len(n, x.len())?;
    let s = x.spins();
    let delta: Vec<f64> = (0..n).map(|i| -2.0 * s[i] * h.local_field(i, &s)).collect();
    let mut best = (0.0, None::<usize>, None::<usize>);
    for (i, &d) in delta.iter().enumerate() {
        if d < best.0 {
            best = (d, Some(i), None);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = delta[i] + delta[j] + 4.0 * h.coupling(i, j) * s[i] * s[j];
            if d < best.0 {
                best = (d, Some(i), Some(j));
            }
        }
    }
    let mut out = x.clone();
    for v in [best.1, best.2].into_iter().flatten() {
        out.flip(v);
    }
    // guard against roundoff in the incremental deltas
    if out != *x && h.eval(&out)? >= h.eval(x)? {
        return Ok(x.clone());
    }
    Ok(out)
}
