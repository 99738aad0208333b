use super::{embed_sphere, match_pairs, Matching};
use crate::error::{check_len, Error, Result};
use crate::problem::{Bitstring, MaxCutGraph};

/// Fine-node to coarse-node surjection between two adjacent levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarseMap {
    fine_to_coarse: Vec<usize>,
    coarse_n: usize,
}

impl CoarseMap {
    pub fn new(fine_to_coarse: Vec<usize>, coarse_n: usize) -> Result<Self> {
        if let Some(&c) = fine_to_coarse.iter().find(|&&c| c >= coarse_n) {
            return Err(Error::NodeOutOfRange { node: c, n: coarse_n });
        }
        Ok(Self { fine_to_coarse, coarse_n })
    }

    pub fn identity(n: usize) -> Self {
        Self { fine_to_coarse: (0..n).collect(), coarse_n: n }
    }

    pub fn fine_n(&self) -> usize {
        self.fine_to_coarse.len()
    }

    pub fn coarse_n(&self) -> usize {
        self.coarse_n
    }

    pub fn parent(&self, fine: usize) -> usize {
        self.fine_to_coarse[fine]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.fine_to_coarse
    }
}

/// Contracts each pair into one coarse node (pairs first, then singletons, in matching
/// order). Coarse weights are sums of fine weights between groups; intra-pair edges vanish
/// because both endpoints inherit one bit.
pub fn coarsen(g: &MaxCutGraph, m: &Matching) -> Result<(MaxCutGraph, CoarseMap)> {
    if !m.is_partition_of(g.n()) {
        return Err(Error::InvalidProblem("matching does not partition the graph nodes".into()));
    }
    let mut map = vec![0usize; g.n()];
    for (c, &(a, b)) in m.pairs.iter().enumerate() {
        map[a] = c;
        map[b] = c;
    }
    for (k, &s) in m.singletons.iter().enumerate() {
        map[s] = m.pairs.len() + k;
    }
    let coarse_n = m.num_groups();
    let edges = g.edges().iter().map(|e| (map[e.i], map[e.j], e.w)).filter(|&(a, b, _)| a != b);
    let coarse = MaxCutGraph::from_accumulated(coarse_n, edges)?;
    Ok((coarse, CoarseMap::new(map, coarse_n)?))
}

/// Each fine node takes its coarse parent's bit.
pub fn interpolate(coarse_solution: &Bitstring, map: &CoarseMap) -> Result<Bitstring> {
    check_len(map.coarse_n(), coarse_solution.len())?;
    Bitstring::new(map.as_slice().iter().map(|&c| coarse_solution.get(c)).collect())
}

/// Graphs `G_0 .. G_L` (finest first) and the maps between consecutive levels.
#[derive(Debug, Clone)]
pub struct CoarseningHierarchy {
    pub levels: Vec<MaxCutGraph>,
    /// `maps[l]` sends nodes of `levels[l]` to nodes of `levels[l + 1]`.
    pub maps: Vec<CoarseMap>,
}

impl CoarseningHierarchy {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn finest(&self) -> &MaxCutGraph {
        &self.levels[0]
    }

    pub fn coarsest(&self) -> &MaxCutGraph {
        self.levels.last().expect("hierarchy has at least one level")
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(MaxCutGraph::n).collect()
    }
}

pub(crate) fn level_seed(seed: u64, level: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(level as u64 + 1)
}

/// Embed, match and coarsen until the graph has at most `coarsest_size` nodes or a level
/// stops shrinking.
pub fn build_hierarchy(
    g0: &MaxCutGraph,
    coarsest_size: usize,
    d: usize,
    iters: usize,
    seed: u64,
) -> Result<CoarseningHierarchy> {
    if coarsest_size < 2 {
        return Err(Error::InvalidConfig("coarsest_size must be at least 2".into()));
    }
    let mut levels = vec![g0.clone()];
    let mut maps = Vec::new();
    while levels.last().unwrap().n() > coarsest_size {
        let g = levels.last().unwrap();
        let s = level_seed(seed, levels.len());
        let emb = embed_sphere(g, d, iters, s);
        let m = match_pairs(&emb, s ^ 0x5eed);
        let (coarse, map) = coarsen(g, &m)?;
        if coarse.n() >= g.n() {
            break;
        }
        levels.push(coarse);
        maps.push(map);
    }
    Ok(CoarseningHierarchy { levels, maps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_pair_accumulates() {
        let g = MaxCutGraph::new(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let m = Matching { pairs: vec![(0, 1)], singletons: vec![2] };
        let (c, map) = coarsen(&g, &m).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.weight(0, 1), 2.0);
        assert_eq!(map.as_slice(), &[0, 0, 1]);
    }

    #[test]
    fn all_singletons_is_relabeling() {
        let g = MaxCutGraph::new(3, [(0, 1, 1.0), (1, 2, -2.0)]).unwrap();
        let m = Matching { pairs: vec![], singletons: vec![0, 1, 2] };
        let (c, _) = coarsen(&g, &m).unwrap();
        assert_eq!(c, g);
    }

    #[test]
    fn contracted_only_edge_vanishes() {
        let g = MaxCutGraph::new(2, [(0, 1, 3.0)]).unwrap();
        let m = Matching { pairs: vec![(1, 0)], singletons: vec![] };
        let (c, _) = coarsen(&g, &m).unwrap();
        assert_eq!((c.n(), c.num_edges()), (1, 0));
    }

    #[test]
    fn weights_can_cancel() {
        let g = MaxCutGraph::new(3, [(0, 2, 1.0), (1, 2, -1.0)]).unwrap();
        let m = Matching { pairs: vec![(0, 1)], singletons: vec![2] };
        let (c, _) = coarsen(&g, &m).unwrap();
        assert_eq!(c.num_edges(), 0);
        assert!(c.total_abs_weight() <= g.total_abs_weight());
    }

    #[test]
    fn rejects_non_partition() {
        let g = MaxCutGraph::empty(3);
        let m = Matching { pairs: vec![(0, 1)], singletons: vec![1] };
        assert!(coarsen(&g, &m).is_err());
    }

    #[test]
    fn interpolation_examples() {
        let x: Bitstring = "101".parse().unwrap();
        assert_eq!(interpolate(&x, &CoarseMap::identity(3)).unwrap(), x);
        let map = CoarseMap::new(vec![0, 0, 1], 2).unwrap();
        assert_eq!(interpolate(&"10".parse().unwrap(), &map).unwrap().bits(), &[1, 1, 0]);
        assert!(interpolate(&x, &map).is_err());
    }

    #[test]
    fn small_graph_single_level() {
        let g = MaxCutGraph::new(4, [(0, 1, 1.0)]).unwrap();
        let h = build_hierarchy(&g, 4, 2, 5, 0).unwrap();
        assert_eq!(h.depth(), 1);
        assert!(h.maps.is_empty());
        assert!(build_hierarchy(&g, 1, 2, 5, 0).is_err());
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> MaxCutGraph {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random::<f64>() < p {
                    e.push((i, j, rng.random_range(-1.0..1.0)));
                }
            }
        }
        MaxCutGraph::new(n, e).unwrap()
    }

    #[test]
    fn hierarchy_roughly_halves() {
        let g = random_graph(100, 0.1, 1);
        let h = build_hierarchy(&g, 13, 2, 20, 4).unwrap();
        assert_eq!(h.sizes(), vec![100, 50, 25, 13]);
        for w in h.levels.windows(2) {
            assert!(w[1].total_abs_weight() <= w[0].total_abs_weight() + 1e-9);
        }
    }

    #[test]
    fn interpolated_cuts_match_every_level() {
        use rand::SeedableRng;
        let g = random_graph(80, 0.1, 2);
        let h = build_hierarchy(&g, 10, 2, 20, 0).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for (l, map) in h.maps.iter().enumerate() {
            let xc = Bitstring::random(h.levels[l + 1].n(), &mut rng);
            let xf = interpolate(&xc, map).unwrap();
            let (a, b) = (h.levels[l + 1].cut(&xc).unwrap(), h.levels[l].cut(&xf).unwrap());
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }
}
