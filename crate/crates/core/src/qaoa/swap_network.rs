use crate::error::{Error, Result};

/// One layer of simultaneous nearest-neighbor interactions, as logical qubit pairs.
pub type Layer = Vec<(usize, usize)>;

/// Odd-even transposition network over `ordering` (position -> logical qubit). Layer `l`
/// acts on positions `(i, i+1)` with `i = l mod 2` and swaps them afterwards; after `n`
/// layers every unordered pair of logical qubits has met exactly once.
pub fn swap_network_layers(n: usize, ordering: &[usize]) -> Result<Vec<Layer>> {
    if n < 2 {
        return Err(Error::InvalidConfig("swap network needs at least 2 qubits".into()));
    }
    validate_ordering(n, ordering)?;
    let mut labels = ordering.to_vec();
    let mut layers = Vec::with_capacity(n);
    for l in 0..n {
        let mut layer = Vec::new();
        let mut i = l % 2;
        while i + 1 < n {
            layer.push((labels[i], labels[i + 1]));
            labels.swap(i, i + 1);
            i += 2;
        }
        layers.push(layer);
    }
    Ok(layers)
}

pub fn validate_ordering(n: usize, ordering: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if ordering.len() != n || ordering.iter().any(|&q| q >= n || std::mem::replace(&mut seen[q], true)) {
        return Err(Error::InvalidConfig(format!("ordering is not a permutation of 0..{n}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn covered(layers: &[Layer]) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = layers.iter().flatten().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort();
        pairs
    }

    #[test]
    fn two_qubits() {
        let layers = swap_network_layers(2, &[0, 1]).unwrap();
        assert_eq!(layers.len(), 2);
        assert_eq!(covered(&layers), vec![(0, 1)]);
    }

    #[test]
    fn four_qubits_cover_all_pairs_once() {
        let layers = swap_network_layers(4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(layers.len(), 4);
        assert_eq!(covered(&layers), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn permuted_ordering_same_pairs_different_layers() {
        let a = swap_network_layers(5, &[0, 1, 2, 3, 4]).unwrap();
        let b = swap_network_layers(5, &[3, 0, 4, 2, 1]).unwrap();
        assert_eq!(covered(&a), covered(&b));
        assert_ne!(a, b);
        assert_eq!(covered(&a).len(), 10);
    }

    #[test]
    fn rejects_bad_ordering() {
        assert!(swap_network_layers(3, &[0, 0, 1]).is_err());
        assert!(swap_network_layers(3, &[0, 1]).is_err());
        assert!(swap_network_layers(1, &[0]).is_err());
    }
}
