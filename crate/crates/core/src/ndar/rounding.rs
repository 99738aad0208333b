use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::problem::{Bitstring, IsingHamiltonian, MaxCutGraph};

/// Sign-rounds every eigenvector of the symmetric matrix `m`, ordered by ascending
/// eigenvalue. Each eigenvector is oriented so its entries sum to a nonnegative value
/// (first nonzero entry positive on a zero sum); entries `>= 0` become bit 0.
pub fn sign_round_candidates(m: &DMatrix<f64>) -> Result<Vec<Bitstring>> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::Eigensolver(format!("{}x{} matrix is not square", n, m.ncols())));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::Eigensolver("matrix has non-finite entries".into()));
    }
    let eig = SymmetricEigen::try_new(m.clone(), f64::EPSILON, 100_000)
        .ok_or_else(|| Error::Eigensolver("symmetric eigensolver did not converge".into()))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]).then(a.cmp(&b)));
    Ok(order
        .into_iter()
        .map(|k| {
            let v = eig.eigenvectors.column(k);
            let sum: f64 = v.iter().sum();
            let flip = if sum.abs() > 1e-12 {
                sum < 0.0
            } else {
                v.iter().find(|x| x.abs() > 1e-12).is_some_and(|&x| x < 0.0)
            };
            let bits = v.iter().map(|&x| if x == 0.0 || (x > 0.0) != flip { 0 } else { 1 }).collect();
            Bitstring::new(bits).expect("binary entries")
        })
        .collect())
}

fn best_candidate<F: FnMut(&Bitstring) -> Result<f64>>(
    candidates: Vec<Bitstring>,
    n: usize,
    mut energy: F,
) -> Result<Bitstring> {
    let mut best: Option<(Bitstring, f64)> = None;
    for c in candidates {
        let e = energy(&c)?;
        if best.as_ref().is_none_or(|(_, b)| e < *b) {
            best = Some((c, e));
        }
    }
    Ok(best.map(|(c, _)| c).unwrap_or_else(|| Bitstring::zeros(n)))
}

fn check_corr(corr: &DMatrix<f64>, h: &IsingHamiltonian) -> Result<()> {
    if corr.nrows() != h.n() || corr.ncols() != h.n() {
        return Err(Error::LengthMismatch { expected: h.n(), actual: corr.nrows() });
    }
    Ok(())
}

/// `Z_ij = -corr_ij` off the diagonal, zero on it.
pub fn qrr_matrix(corr: &DMatrix<f64>) -> DMatrix<f64> {
    let n = corr.nrows();
    DMatrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { -0.5 * (corr[(i, j)] + corr[(j, i)]) })
}

/// `M_ij = J_ij corr_ij` off the diagonal, zero on it.
pub fn wqrr_matrix(corr: &DMatrix<f64>, h: &IsingHamiltonian) -> DMatrix<f64> {
    let n = corr.nrows();
    let mut m = DMatrix::zeros(n, n);
    for &(i, j, v) in h.couplings() {
        let w = v * 0.5 * (corr[(i, j)] + corr[(j, i)]);
        m[(i, j)] = w;
        m[(j, i)] = w;
    }
    m
}

/// Quantum relax-and-round: best of the `n` sign-rounded eigenvectors of the
/// correlation-derived matrix.
pub fn qrr_round(corr: &DMatrix<f64>, h: &IsingHamiltonian) -> Result<Bitstring> {
    check_corr(corr, h)?;
    best_candidate(sign_round_candidates(&qrr_matrix(corr))?, h.n(), |x| h.eval(x))
}

/// QRR on coupling-weighted correlators.
pub fn wqrr_round(corr: &DMatrix<f64>, h: &IsingHamiltonian) -> Result<Bitstring> {
    check_corr(corr, h)?;
    best_candidate(sign_round_candidates(&wqrr_matrix(corr, h))?, h.n(), |x| h.eval(x))
}

/// Relax-and-round on the weighted adjacency matrix; returns the best cut candidate.
pub fn classical_relax_round(g: &MaxCutGraph) -> Result<Bitstring> {
    let n = g.n();
    let mut w = DMatrix::zeros(n, n);
    for e in g.edges() {
        w[(e.i, e.j)] = e.w;
        w[(e.j, e.i)] = e.w;
    }
    best_candidate(sign_round_candidates(&w)?, n, |x| Ok(-g.cut(x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::brute_force;

    fn bs(s: &str) -> Bitstring {
        s.parse().unwrap()
    }

    #[test]
    fn qrr_two_qubits_all_zero_shots() {
        let corr = DMatrix::from_element(2, 2, 1.0);
        let mut c = sign_round_candidates(&qrr_matrix(&corr)).unwrap();
        c.sort();
        assert_eq!(c, vec![bs("00"), bs("01")]);
        let h = IsingHamiltonian::new(vec![0.0, 0.0], vec![(0, 1, 1.0)], 0.0).unwrap();
        assert_eq!(qrr_round(&corr, &h).unwrap(), bs("01"));
        let h = IsingHamiltonian::new(vec![0.0, 0.0], vec![(0, 1, -1.0)], 0.0).unwrap();
        assert_eq!(qrr_round(&corr, &h).unwrap(), bs("00"));
    }

    #[test]
    fn uncorrelated_still_valid() {
        let corr = DMatrix::identity(4, 4);
        let h = IsingHamiltonian::new(vec![0.1; 4], vec![(0, 1, 1.0)], 0.0).unwrap();
        assert_eq!(sign_round_candidates(&qrr_matrix(&corr)).unwrap().len(), 4);
        assert_eq!(qrr_round(&corr, &h).unwrap().len(), 4);
        assert_eq!(wqrr_round(&corr, &IsingHamiltonian::zero(4)).unwrap().len(), 4);
    }

    #[test]
    fn perfect_ferromagnet() {
        let h = IsingHamiltonian::new(vec![0.0; 3], vec![(0, 1, -1.0), (0, 2, -1.0), (1, 2, -1.0)], 0.0).unwrap();
        let x = qrr_round(&DMatrix::from_element(3, 3, 1.0), &h).unwrap();
        assert_eq!(h.eval(&x).unwrap(), brute_force(&h, 24).unwrap().c_min);
        assert!(x == bs("000") || x == bs("111"));
    }

    #[test]
    fn wqrr_two_qubits() {
        let h = IsingHamiltonian::new(vec![0.0, 0.0], vec![(0, 1, -1.0)], 0.0).unwrap();
        let corr = DMatrix::from_element(2, 2, 1.0);
        let m = wqrr_matrix(&corr, &h);
        assert_eq!(m[(0, 1)], -1.0);
        let mut c = sign_round_candidates(&m).unwrap();
        c.sort();
        assert_eq!(c, vec![bs("00"), bs("01")]);
        assert_eq!(wqrr_round(&corr, &h).unwrap(), bs("00"));
    }

    #[test]
    fn wqrr_uniform_correlations_match_coupling_matrix() {
        let h = IsingHamiltonian::new(
            vec![0.0; 4],
            vec![(0, 1, 1.0), (0, 2, -0.5), (1, 3, 2.0), (2, 3, 0.7), (0, 3, -1.2)],
            0.0,
        )
        .unwrap();
        let mut corr = DMatrix::from_element(4, 4, 0.37);
        corr.fill_diagonal(1.0);
        let jm = wqrr_matrix(&DMatrix::from_element(4, 4, 1.0), &h);
        assert_eq!(sign_round_candidates(&wqrr_matrix(&corr, &h)).unwrap(), sign_round_candidates(&jm).unwrap());
    }

    #[test]
    fn relax_round_examples() {
        let g = MaxCutGraph::new(2, [(0, 1, 1.0)]).unwrap();
        assert_eq!(g.cut(&classical_relax_round(&g).unwrap()).unwrap(), 1.0);
        let k3 = MaxCutGraph::new(3, [(0, 1, -1.0), (0, 2, -1.0), (1, 2, -1.0)]).unwrap();
        assert_eq!(k3.cut(&classical_relax_round(&k3).unwrap()).unwrap(), 0.0);
        let e = MaxCutGraph::empty(3);
        let x = classical_relax_round(&e).unwrap();
        assert_eq!((x.len(), e.cut(&x).unwrap()), (3, 0.0));
    }
}
