//! Dense labeled simple graphs.
//!
//! Vertices are addressed by index `0..order`; each carries a semigroup
//! element as its label and labels are strictly ascending. Adjacency is a
//! symmetric bit matrix, one row of `u64` words per vertex.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealGraph {
    labels: Vec<u32>,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl IdealGraph {
    /// Builds the graph on `labels` (sorted ascending, distinct) with an edge
    /// between `i < j` whenever `adjacent(labels[i], labels[j])` holds.
    pub fn from_predicate(labels: Vec<u32>, mut adjacent: impl FnMut(u32, u32) -> bool) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let mut g = Self::empty(labels);
        for i in 0..g.order() {
            for j in i + 1..g.order() {
                if adjacent(g.labels[i], g.labels[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Builds a graph from labeled edges. Labels are sorted; unknown edge
    /// endpoints and self-loops panic.
    pub fn from_edges(mut labels: Vec<u32>, edges: &[(u32, u32)]) -> Self {
        labels.sort_unstable();
        labels.dedup();
        let mut g = Self::empty(labels);
        for &(a, b) in edges {
            let i = g.index_of(a).expect("edge endpoint is a vertex");
            let j = g.index_of(b).expect("edge endpoint is a vertex");
            assert_ne!(i, j, "self-loop");
            if !g.has_edge(i, j) {
                g.add_edge(i, j);
            }
        }
        g
    }

    fn empty(labels: Vec<u32>) -> Self {
        let words = labels.len().div_ceil(64).max(1);
        let rows = vec![0; words * labels.len()];
        Self {
            labels,
            words,
            rows,
            edge_count: 0,
        }
    }

    fn add_edge(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
        self.edge_count += 1;
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    /// Adjacency row of vertex `i` as bit words.
    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i)
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    /// Ascending vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|i| self.degree(i)).collect();
        d.sort_unstable();
        d
    }

    /// Index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |i| {
            self.neighbors(i)
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// Edges as label pairs, smaller label first, in ascending order.
    pub fn labeled_edges(&self) -> Vec<(u32, u32)> {
        self.edges()
            .map(|(i, j)| (self.labels[i], self.labels[j]))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * n.saturating_sub(1) / 2
    }
}

/// Iterates set bit positions of a word, lowest first.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Ascending list of vertex degrees.
pub fn degree_sequence(g: &IdealGraph) -> Vec<usize> {
    g.degree_sequence()
}
