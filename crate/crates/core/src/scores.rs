use crate::graph::NodeId;

/// Similarity scores for every unordered node pair of an `N`-node graph.
///
/// Stored as a condensed upper triangle, so `get(i, j) == get(j, i)` holds by
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    method: String,
    node_count: usize,
    values: Vec<f64>,
}

impl ScoreTable {
    pub fn zeros(method: impl Into<String>, node_count: usize) -> Self {
        let len = node_count * node_count.saturating_sub(1) / 2;
        ScoreTable {
            method: method.into(),
            node_count,
            values: vec![0.0; len],
        }
    }

    pub fn method(&self) -> &str {
        &self.method
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Number of stored pairs, `N(N-1)/2`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    fn offset(&self, i: NodeId, j: NodeId) -> usize {
        debug_assert!(i != j && i < self.node_count && j < self.node_count);
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a * (2 * self.node_count - a - 1) / 2 + (b - a - 1)
    }

    /// Score of the pair `{i, j}`. Panics when `i == j`.
    pub fn get(&self, i: NodeId, j: NodeId) -> f64 {
        assert_ne!(i, j, "score tables hold distinct pairs only");
        self.values[self.offset(i, j)]
    }

    pub fn set(&mut self, i: NodeId, j: NodeId, value: f64) {
        assert_ne!(i, j, "score tables hold distinct pairs only");
        let k = self.offset(i, j);
        self.values[k] = value;
    }

    pub fn add(&mut self, i: NodeId, j: NodeId, value: f64) {
        assert_ne!(i, j, "score tables hold distinct pairs only");
        let k = self.offset(i, j);
        self.values[k] += value;
    }

    /// `(i, j, score)` with `i < j` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, NodeId, f64)> + '_ {
        let n = self.node_count;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.values.iter().copied())
            .map(|((i, j), v)| (i, j, v))
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Fills the table row by row in parallel. `fill(i, row)` receives the
    /// slice for pairs `(i, j)` with `j > i`, where `row[k]` is `j = i + 1 + k`.
    pub(crate) fn par_fill_rows<F>(&mut self, fill: F)
    where
        F: Fn(NodeId, &mut [f64]) + Sync,
    {
        use rayon::prelude::*;
        let n = self.node_count;
        let mut rows: Vec<&mut [f64]> = Vec::with_capacity(n);
        let mut rest = self.values.as_mut_slice();
        for i in 0..n {
            let (head, tail) = rest.split_at_mut(n - i - 1);
            rows.push(head);
            rest = tail;
        }
        rows.into_par_iter()
            .enumerate()
            .for_each(|(i, row)| fill(i, row));
    }

    pub(crate) fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub(crate) fn values(&self) -> &[f64] {
        &self.values
    }
}
