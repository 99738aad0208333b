use crate::problem::{Bitstring, IsingHamiltonian};

/// Best-improvement single-flip descent; the output is 1-flip locally optimal.
pub fn greedy_local_search(h: &IsingHamiltonian, x0: &Bitstring) -> Bitstring {
    let n = h.n();
    assert_eq!(n, x0.len(), "greedy_local_search: length mismatch");
    let mut s = x0.spins();
    let mut field: Vec<f64> = (0..n).map(|i| h.local_field(i, &s)).collect();
    loop {
        let mut best = (0usize, -1e-12);
        for i in 0..n {
            let delta = -2.0 * s[i] * field[i];
            if delta < best.1 {
                best = (i, delta);
            }
        }
        if best.1 >= -1e-12 {
            break;
        }
        let i = best.0;
        for &(j, v) in h.neighbors(i) {
            field[j] -= 2.0 * v * s[i];
        }
        s[i] = -s[i];
    }
    spins_to_bits(&s)
}

pub(crate) fn spins_to_bits(s: &[f64]) -> Bitstring {
    Bitstring::new(s.iter().map(|&v| if v < 0.0 { 1 } else { 0 }).collect()).expect("binary")
}
