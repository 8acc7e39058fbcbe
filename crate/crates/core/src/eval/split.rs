use std::collections::HashSet;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Training graph plus the held-out edges.
#[derive(Debug, Clone)]
pub struct TrainTestSplit {
    pub train: Graph,
    /// Held-out edges as `(i, j)` with `i < j`, sorted.
    pub test_edges: Vec<(NodeId, NodeId)>,
    pub ratio: f64,
    pub seed: u64,
}

/// `round(ratio · m)`, at least one and leaving at least one training edge.
pub fn test_edge_count(edge_count: usize, ratio: f64) -> usize {
    let k = (ratio * edge_count as f64).round() as usize;
    k.max(1).min(edge_count.saturating_sub(1))
}

/// Removes a uniformly random `ratio` share of the edges, deterministically
/// for a given seed. Nodes left isolated stay in the training graph.
pub fn split(g: &Graph, ratio: f64, seed: u64) -> Result<TrainTestSplit> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(Error::invalid(format!("test ratio {ratio} outside (0, 1)")));
    }
    let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    if edges.len() < 2 {
        return Err(Error::invalid("splitting needs at least two edges"));
    }
    let k = test_edge_count(edges.len(), ratio);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut test_edges: Vec<(NodeId, NodeId)> = sample(&mut rng, edges.len(), k)
        .into_iter()
        .map(|idx| edges[idx])
        .collect();
    test_edges.sort_unstable();
    let removed: HashSet<(NodeId, NodeId)> = test_edges.iter().copied().collect();
    Ok(TrainTestSplit {
        train: g.without_edges(&removed),
        test_edges,
        ratio,
        seed,
    })
}

/// Every pair that is not an edge of the training graph, labelled as a
/// missing (held-out) edge or a non-existent one.
#[derive(Debug, Clone)]
pub struct CandidateUniverse {
    pairs: Vec<(NodeId, NodeId)>,
    missing: Vec<bool>,
    missing_count: usize,
}

impl CandidateUniverse {
    pub fn new(train: &Graph, test_edges: &[(NodeId, NodeId)]) -> Self {
        let held_out: HashSet<(NodeId, NodeId)> = test_edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let n = train.node_count();
        let mut pairs = Vec::new();
        let mut missing = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if train.has_edge(i, j) {
                    continue;
                }
                pairs.push((i, j));
                missing.push(held_out.contains(&(i, j)));
            }
        }
        let missing_count = missing.iter().filter(|&&m| m).count();
        CandidateUniverse {
            pairs,
            missing,
            missing_count,
        }
    }

    pub fn from_split(split: &TrainTestSplit) -> Self {
        Self::new(&split.train, &split.test_edges)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn missing_count(&self) -> usize {
        self.missing_count
    }

    pub fn nonexistent_count(&self) -> usize {
        self.pairs.len() - self.missing_count
    }

    /// `(i, j, is_missing)` for each candidate pair.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, NodeId, bool)> + '_ {
        self.pairs
            .iter()
            .zip(&self.missing)
            .map(|(&(i, j), &m)| (i, j, m))
    }
}
