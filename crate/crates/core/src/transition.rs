use crate::graph::{Graph, NodeId};

/// Sparse row-stochastic matrix supported on graph edges.
///
/// Row `i` holds `PR(X_{t+1} = j | X_t = i)`. Isolated nodes carry a single
/// self-loop of weight one so every row stays stochastic.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    row_ptr: Vec<usize>,
    cols: Vec<NodeId>,
    vals: Vec<f64>,
}

impl TransitionMatrix {
    /// Assembles a matrix from per-row `(column, weight)` entries. Each row is
    /// normalised to sum to one; an empty row becomes the self-loop row.
    pub(crate) fn from_weighted_rows<I>(rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<(NodeId, f64)>>,
    {
        let mut row_ptr = vec![0];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            if row.is_empty() {
                cols.push(i);
                vals.push(1.0);
            } else {
                let total: f64 = row.iter().map(|&(_, w)| w).sum();
                for (j, w) in row {
                    cols.push(j);
                    vals.push(w / total);
                }
            }
            row_ptr.push(cols.len());
        }
        TransitionMatrix {
            row_ptr,
            cols,
            vals,
        }
    }

    pub fn dim(&self) -> usize {
        self.row_ptr.len() - 1
    }

    /// Non-zero entries of row `i` as `(column, probability)`.
    pub fn row(&self, i: NodeId) -> impl Iterator<Item = (NodeId, f64)> + '_ {
        let span = self.row_ptr[i]..self.row_ptr[i + 1];
        self.cols[span.clone()]
            .iter()
            .copied()
            .zip(self.vals[span].iter().copied())
    }

    pub fn get(&self, i: NodeId, j: NodeId) -> f64 {
        self.row(i).find(|&(c, _)| c == j).map_or(0.0, |(_, p)| p)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        let mut out = vec![vec![0.0; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, p) in self.row(i) {
                row[j] += p;
            }
        }
        out
    }

    /// One walker step for a distribution held as a row vector:
    /// `next = current · PR`, i.e. `PRᵀ π`.
    pub fn step(&self, current: &[f64], next: &mut [f64]) {
        next.iter_mut().for_each(|x| *x = 0.0);
        for (k, &mass) in current.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            for (j, p) in self.row(k) {
                next[j] += mass * p;
            }
        }
    }

    /// Largest deviation of any row sum from one.
    pub fn max_row_deviation(&self) -> f64 {
        (0..self.dim())
            .map(|i| (self.row(i).map(|(_, p)| p).sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Whether every non-zero entry lies on an edge of `g` (or on the
    /// diagonal of an isolated node) and all entries are within `[0, 1]`.
    pub fn is_supported_on(&self, g: &Graph) -> bool {
        if self.dim() != g.node_count() {
            return false;
        }
        (0..self.dim()).all(|i| {
            self.row(i).all(|(j, p)| {
                let on_support = if g.degree(i) == 0 {
                    j == i
                } else {
                    g.has_edge(i, j)
                };
                (0.0..=1.0).contains(&p) && (p == 0.0 || on_support)
            })
        })
    }
}

/// Degree-uniform walk: `PR_ij = 1/k_i` for `j ∈ Γ(i)`.
pub fn uniform_transition_matrix(g: &Graph) -> TransitionMatrix {
    TransitionMatrix::from_weighted_rows(
        (0..g.node_count()).map(|i| g.neighbors(i).iter().map(|&j| (j, 1.0)).collect()),
    )
}
