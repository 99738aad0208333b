//! Static K-D tree with point removal, sized for nearest-unmatched-neighbor matching.

#[derive(Debug, Clone)]
struct Node {
    point: usize,
    axis: usize,
    left: Option<usize>,
    right: Option<usize>,
    parent: Option<usize>,
    alive: bool,
    subtree_alive: usize,
}

#[derive(Debug, Clone)]
pub struct KdTree<'a> {
    dim: usize,
    coords: &'a [f64],
    nodes: Vec<Node>,
    node_of: Vec<usize>,
    root: Option<usize>,
}

impl<'a> KdTree<'a> {
    /// `coords` holds `coords.len() / dim` points, row-major.
    pub fn new(coords: &'a [f64], dim: usize) -> Self {
        assert!(dim >= 1 && coords.len().is_multiple_of(dim));
        let n = coords.len() / dim;
        let mut tree = Self { dim, coords, nodes: Vec::with_capacity(n), node_of: vec![0; n], root: None };
        let mut ids: Vec<usize> = (0..n).collect();
        tree.root = tree.build(&mut ids, 0, None);
        tree
    }

    fn coord(&self, p: usize, axis: usize) -> f64 {
        self.coords[p * self.dim + axis]
    }

    fn build(&mut self, ids: &mut [usize], depth: usize, parent: Option<usize>) -> Option<usize> {
        if ids.is_empty() {
            return None;
        }
        let axis = depth % self.dim;
        let mid = ids.len() / 2;
        ids.select_nth_unstable_by(mid, |&a, &b| self.coord(a, axis).total_cmp(&self.coord(b, axis)).then(a.cmp(&b)));
        let point = ids[mid];
        let idx = self.nodes.len();
        self.nodes.push(Node { point, axis, left: None, right: None, parent, alive: true, subtree_alive: ids.len() });
        self.node_of[point] = idx;
        let (lo, rest) = ids.split_at_mut(mid);
        let left = self.build(lo, depth + 1, Some(idx));
        let right = self.build(&mut rest[1..], depth + 1, Some(idx));
        self.nodes[idx].left = left;
        self.nodes[idx].right = right;
        Some(idx)
    }

    pub fn alive(&self) -> usize {
        self.root.map_or(0, |r| self.nodes[r].subtree_alive)
    }

    pub fn is_alive(&self, p: usize) -> bool {
        self.nodes[self.node_of[p]].alive
    }

    pub fn remove(&mut self, p: usize) {
        let mut idx = self.node_of[p];
        if !self.nodes[idx].alive {
            return;
        }
        self.nodes[idx].alive = false;
        loop {
            self.nodes[idx].subtree_alive -= 1;
            match self.nodes[idx].parent {
                Some(parent) => idx = parent,
                None => break,
            }
        }
    }

    fn dist2(&self, a: usize, q: &[f64]) -> f64 {
        (0..self.dim).map(|k| (self.coord(a, k) - q[k]).powi(2)).sum()
    }

    /// Nearest live point to `query`; equal distances resolve to the lower index.
    pub fn nearest(&self, query: &[f64]) -> Option<usize> {
        let mut best: Option<(f64, usize)> = None;
        if let Some(r) = self.root {
            self.search(r, query, &mut best);
        }
        best.map(|b| b.1)
    }

    fn search(&self, idx: usize, q: &[f64], best: &mut Option<(f64, usize)>) {
        let node = &self.nodes[idx];
        if node.subtree_alive == 0 {
            return;
        }
        if node.alive {
            let d = self.dist2(node.point, q);
            if best.is_none_or(|(bd, bp)| d < bd || (d == bd && node.point < bp)) {
                *best = Some((d, node.point));
            }
        }
        let diff = q[node.axis] - self.coord(node.point, node.axis);
        let (near, far) = if diff < 0.0 { (node.left, node.right) } else { (node.right, node.left) };
        if let Some(c) = near {
            self.search(c, q, best);
        }
        if let Some(c) = far {
            if best.is_none_or(|(bd, _)| diff * diff <= bd) {
                self.search(c, q, best);
            }
        }
    }
}
