use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::problem::{Bitstring, GaugeVector, IsingHamiltonian};

/// Best of `n_random` uniform random bitstrings, used as the starting gauge so that the
/// all-zeros state of the gauged Hamiltonian carries that cost.
pub fn preprocess_gauge(h: &IsingHamiltonian, n_random: usize, seed: u64) -> Result<GaugeVector> {
    if n_random == 0 {
        return Err(Error::InvalidConfig("n_random must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Bitstring, f64)> = None;
    for _ in 0..n_random {
        let x = Bitstring::random(h.n(), &mut rng);
        let e = h.eval(&x)?;
        if best.as_ref().is_none_or(|(_, b)| e < *b) {
            best = Some((x, e));
        }
    }
    Ok(GaugeVector::from(&best.unwrap().0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::brute_force;

    #[test]
    fn single_spin() {
        let h = IsingHamiltonian::new(vec![1.0], vec![], 0.0).unwrap();
        let g = preprocess_gauge(&h, 64, 0).unwrap();
        assert_eq!(g.bits(), &[1]);
        let hg = h.apply_gauge(&g).unwrap();
        assert_eq!(hg.fields(), &[-1.0]);
        assert_eq!(hg.eval(&Bitstring::zeros(1)).unwrap(), -1.0);
    }

    #[test]
    fn many_draws_find_optimum() {
        let h = IsingHamiltonian::new(vec![0.2, -0.5, 0.1, 0.0], vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, -1.0)], 0.0)
            .unwrap();
        let g = preprocess_gauge(&h, 2000, 5).unwrap();
        let hg = h.apply_gauge(&g).unwrap();
        assert_eq!(hg.eval(&Bitstring::zeros(4)).unwrap(), brute_force(&h, 24).unwrap().c_min);
        assert_eq!(g, preprocess_gauge(&h, 2000, 5).unwrap());
    }
}
