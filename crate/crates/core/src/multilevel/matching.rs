use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::kdtree::KdTree;
use super::SphereEmbedding;

/// Disjoint node pairs plus unmatched singletons; together they partition the nodes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub singletons: Vec<usize>,
}

impl Matching {
    pub fn num_groups(&self) -> usize {
        self.pairs.len() + self.singletons.len()
    }

    /// True when every node in `0..n` appears exactly once.
    pub fn is_partition_of(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        let nodes = self.pairs.iter().flat_map(|&(a, b)| [a, b]).chain(self.singletons.iter().copied());
        let mut count = 0;
        for v in nodes {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
            count += 1;
        }
        count == n
    }
}

/// Greedy nearest-neighbor pairing: nodes are visited in a seeded random order and each
/// unmatched node is paired with its nearest unmatched neighbor in the embedding.
pub fn match_pairs(emb: &SphereEmbedding, seed: u64) -> Matching {
    let n = emb.len();
    let dim = emb.dim() + 1;
    let coords: Vec<f64> = (0..n).flat_map(|i| emb.point(i).to_vec()).collect();
    let mut tree = KdTree::new(&coords, dim);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut m = Matching::default();
    for u in order {
        if !tree.is_alive(u) {
            continue;
        }
        tree.remove(u);
        match tree.nearest(emb.point(u)) {
            Some(v) => {
                tree.remove(v);
                m.pairs.push((u, v));
            }
            None => m.singletons.push(u),
        }
    }
    m
}
