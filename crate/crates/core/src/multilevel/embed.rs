use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::problem::MaxCutGraph;

pub const DEFAULT_EMBED_DIM: usize = 2;
pub const DEFAULT_EMBED_ITERS: usize = 20;

/// Unit vectors in `R^(d+1)`, one per node, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereEmbedding {
    d: usize,
    coords: Vec<f64>,
}

impl SphereEmbedding {
    pub fn from_points(d: usize, points: &[Vec<f64>]) -> Self {
        let mut coords = Vec::with_capacity(points.len() * (d + 1));
        for p in points {
            assert_eq!(p.len(), d + 1, "point dimension must be d + 1");
            coords.extend_from_slice(p);
        }
        Self { d, coords }
    }

    /// Sphere dimension `d`; points live in `d + 1` coordinates.
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.coords.len() / (self.d + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        let k = self.d + 1;
        &self.coords[i * k..(i + 1) * k]
    }

    pub fn dot(&self, i: usize, j: usize) -> f64 {
        self.point(i).iter().zip(self.point(j)).map(|(a, b)| a * b).sum()
    }
}

/// Random start on the unit sphere followed by `iters` in-order sweeps. Each node moves to
/// the normalized `-sum_j w_ij p_j`, which maximizes its weighted squared distance to its
/// neighbors; a node whose weighted sum vanishes stays put.
pub fn embed_sphere(g: &MaxCutGraph, d: usize, iters: usize, seed: u64) -> SphereEmbedding {
    assert!(d >= 1, "embedding dimension must be at least 1");
    let k = d + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = vec![0.0; g.n() * k];
    for p in coords.chunks_mut(k) {
        loop {
            for c in p.iter_mut() {
                *c = StandardNormal.sample(&mut rng);
            }
            if normalize(p) {
                break;
            }
        }
    }
    let mut acc = vec![0.0; k];
    for _ in 0..iters {
        for i in 0..g.n() {
            acc.iter_mut().for_each(|a| *a = 0.0);
            for &(j, w) in g.neighbors(i) {
                for (a, c) in acc.iter_mut().zip(&coords[j * k..(j + 1) * k]) {
                    *a -= w * c;
                }
            }
            if normalize(&mut acc) {
                coords[i * k..(i + 1) * k].copy_from_slice(&acc);
            }
        }
    }
    SphereEmbedding { d, coords }
}

fn normalize(v: &mut [f64]) -> bool {
    let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm <= 1e-300 {
        return false;
    }
    v.iter_mut().for_each(|c| *c /= norm);
    true
}
