/// Compressed neighbor lists built from an undirected weighted edge list.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Adjacency {
    offsets: Vec<usize>,
    entries: Vec<(usize, f64)>,
}

impl Adjacency {
    pub fn from_edges(n: usize, edges: impl Iterator<Item = (usize, usize, f64)> + Clone) -> Self {
        let mut degree = vec![0usize; n];
        for (i, j, _) in edges.clone() {
            degree[i] += 1;
            degree[j] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut entries = vec![(0usize, 0.0f64); offsets[n]];
        for (i, j, w) in edges {
            entries[fill[i]] = (j, w);
            fill[i] += 1;
            entries[fill[j]] = (i, w);
            fill[j] += 1;
        }
        Self { offsets, entries }
    }

    #[inline]
    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.entries[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }
}
