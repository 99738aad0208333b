use std::collections::BTreeMap;

use super::{Bitstring, IsingHamiltonian, Problem, Representation, Sense};
use crate::error::{check_len, Error, Result};

/// `max_x sum_{i<=j} Q_ij x_i x_j` with an upper-triangular, sparsely stored `Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuboProblem {
    n: usize,
    /// Sorted by `(i, j)`, `j >= i`, no duplicates, no zeros.
    terms: Vec<(usize, usize, f64)>,
}

impl QuboProblem {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidProblem("QUBO needs at least one variable".into()));
        }
        let mut map = BTreeMap::new();
        for (i, j, q) in terms {
            if i >= n || j >= n {
                return Err(Error::NodeOutOfRange { node: i.max(j), n });
            }
            if j < i {
                return Err(Error::InvalidProblem(format!("entry ({i},{j}) below the diagonal")));
            }
            if !q.is_finite() {
                return Err(Error::InvalidProblem(format!("non-finite entry at ({i},{j})")));
            }
            if map.insert((i, j), q).is_some() {
                return Err(Error::InvalidProblem(format!("duplicate entry ({i},{j})")));
            }
        }
        let terms = map.into_iter().filter(|&(_, q)| q != 0.0).map(|((i, j), q)| (i, j, q)).collect();
        Ok(Self { n, terms })
    }

    /// Reads the upper triangle (including the diagonal) of a dense row-major matrix.
    pub fn from_dense(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut terms = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            check_len(n, row.len())?;
            for (j, &q) in row.iter().enumerate().skip(i) {
                terms.push((i, j, q));
            }
        }
        Self::new(n, terms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(usize, usize, f64)] {
        &self.terms
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.terms.binary_search_by(|&(a, b, _)| (a, b).cmp(&(i, j))).map(|k| self.terms[k].2).unwrap_or(0.0)
    }

    pub fn eval(&self, x: &Bitstring) -> Result<f64> {
        check_len(self.n, x.len())?;
        let b = x.bits();
        Ok(self.terms.iter().filter(|&&(i, j, _)| b[i] == 1 && b[j] == 1).map(|&(_, _, q)| q).sum())
    }
}

impl Problem for QuboProblem {
    fn num_vars(&self) -> usize {
        self.n
    }

    fn sense(&self) -> Sense {
        Sense::Maximize
    }

    fn representation(&self) -> Representation {
        Representation::Qubo
    }

    fn evaluate(&self, x: &Bitstring) -> Result<f64> {
        self.eval(x)
    }

    fn to_energy_form(&self) -> IsingHamiltonian {
        // x_i = (1 - s_i) / 2
        let mut h = vec![0.0; self.n];
        let mut couplings = Vec::new();
        let mut constant = 0.0;
        for &(i, j, q) in &self.terms {
            if i == j {
                constant += q / 2.0;
                h[i] -= q / 2.0;
            } else {
                constant += q / 4.0;
                h[i] -= q / 4.0;
                h[j] -= q / 4.0;
                couplings.push((i, j, q / 4.0));
            }
        }
        IsingHamiltonian::new(h, couplings, constant).expect("valid QUBO gives a valid Ising form")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_lower_triangle_and_duplicates() {
        assert!(QuboProblem::new(2, [(1, 0, 1.0)]).is_err());
        assert!(QuboProblem::new(2, [(0, 1, 1.0), (0, 1, 2.0)]).is_err());
        assert!(QuboProblem::new(0, []).is_err());
        assert!(QuboProblem::new(2, [(0, 2, 1.0)]).is_err());
        assert!(QuboProblem::new(2, [(0, 1, f64::NAN)]).is_err());
    }

    #[test]
    fn energy_form_matches_objective() {
        let q = QuboProblem::from_dense(&[vec![1.5, -2.0, 0.5], vec![0.0, -1.0, 3.0], vec![0.0, 0.0, 0.25]]).unwrap();
        let e = q.to_energy_form();
        for m in 0..8 {
            let x = Bitstring::from_mask(m, 3);
            assert!((q.eval(&x).unwrap() - e.eval(&x).unwrap()).abs() < 1e-12);
        }
    }
}
