//! Neighbourhood-based similarity indices and the local path index.
//!
//! Pairwise functions evaluate a single pair; the `*_scores` builders fill a
//! whole [`ScoreTable`] by enumerating two-hop paths from every node, so pairs
//! without a common neighbour are never visited.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{clustering_unchecked, common_neighbors, Graph, NodeId};
use crate::scores::ScoreTable;

fn checked_pair(g: &Graph, i: NodeId, j: NodeId) -> Result<Vec<NodeId>> {
    g.check_node(i)?;
    g.check_node(j)?;
    if i == j {
        return Err(Error::invalid(format!(
            "pair ({i}, {j}) must have distinct endpoints"
        )));
    }
    common_neighbors(g, i, j)
}

/// `|Γ(i) ∩ Γ(j)| / |Γ(i) ∪ Γ(j)|`, or 0 when both neighbourhoods are empty.
pub fn jaccard(g: &Graph, i: NodeId, j: NodeId) -> Result<f64> {
    let shared = checked_pair(g, i, j)?.len();
    let union = g.degree(i) + g.degree(j) - shared;
    Ok(if union == 0 {
        0.0
    } else {
        shared as f64 / union as f64
    })
}

/// `Σ_{z ∈ Γ(i) ∩ Γ(j)} 1/k_z`.
pub fn resource_allocation(g: &Graph, i: NodeId, j: NodeId) -> Result<f64> {
    Ok(checked_pair(g, i, j)?
        .into_iter()
        .fold(0.0, |acc, z| acc + ra_weight(g, z)))
}

/// `Σ_{z ∈ Γ(i) ∩ Γ(j)} 1/ln k_z`. A common neighbour always has degree at
/// least two, so the logarithm is positive.
pub fn adamic_adar(g: &Graph, i: NodeId, j: NodeId) -> Result<f64> {
    Ok(checked_pair(g, i, j)?
        .into_iter()
        .fold(0.0, |acc, z| acc + aa_weight(g, z)))
}

/// Sum of the local clustering coefficients of the common neighbours.
pub fn cclp(g: &Graph, i: NodeId, j: NodeId) -> Result<f64> {
    Ok(checked_pair(g, i, j)?
        .into_iter()
        .fold(0.0, |acc, z| acc + clustering_unchecked(g, z)))
}

fn ra_weight(g: &Graph, z: NodeId) -> f64 {
    1.0 / g.degree(z) as f64
}

fn aa_weight(g: &Graph, z: NodeId) -> f64 {
    1.0 / (g.degree(z) as f64).ln()
}

/// Fills a table with `Σ_z weight[z]` over common neighbours `z`, visiting
/// each `z` in ascending order like the pairwise functions.
fn common_neighbor_sum(g: &Graph, method: &str, weight: &[f64]) -> ScoreTable {
    let n = g.node_count();
    let mut table = ScoreTable::zeros(method, n);
    table.par_fill_rows(|i, row| {
        for &z in g.neighbors(i) {
            for &j in g.neighbors(z) {
                if j > i {
                    row[j - i - 1] += weight[z];
                }
            }
        }
    });
    table
}

pub fn jaccard_scores(g: &Graph) -> ScoreTable {
    let ones = vec![1.0; g.node_count()];
    let mut table = common_neighbor_sum(g, "jc", &ones);
    table.par_fill_rows(|i, row| {
        for (k, slot) in row.iter_mut().enumerate() {
            let j = i + 1 + k;
            let shared = *slot;
            let union = (g.degree(i) + g.degree(j)) as f64 - shared;
            *slot = if union == 0.0 { 0.0 } else { shared / union };
        }
    });
    table
}

pub fn resource_allocation_scores(g: &Graph) -> ScoreTable {
    let w: Vec<f64> = (0..g.node_count())
        .map(|z| {
            if g.degree(z) > 0 {
                ra_weight(g, z)
            } else {
                0.0
            }
        })
        .collect();
    common_neighbor_sum(g, "ra", &w)
}

pub fn adamic_adar_scores(g: &Graph) -> ScoreTable {
    let w: Vec<f64> = (0..g.node_count())
        .map(|z| {
            if g.degree(z) > 1 {
                aa_weight(g, z)
            } else {
                0.0
            }
        })
        .collect();
    common_neighbor_sum(g, "aa", &w)
}

pub fn cclp_scores(g: &Graph) -> ScoreTable {
    let w: Vec<f64> = (0..g.node_count())
        .map(|z| clustering_unchecked(g, z))
        .collect();
    common_neighbor_sum(g, "cclp", &w)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LpConfig {
    /// Weight of the three-hop term.
    pub alpha: f64,
}

impl Default for LpConfig {
    fn default() -> Self {
        LpConfig { alpha: 0.001 }
    }
}

/// Local path index `(A²)_ij + α (A³)_ij`, counted by sparse two- and
/// three-hop expansion from each node. Three-hop counts are walk counts, so
/// they include walks that revisit an endpoint.
pub fn local_path(g: &Graph, cfg: &LpConfig) -> Result<ScoreTable> {
    if cfg.alpha.is_nan() || cfg.alpha < 0.0 {
        return Err(Error::invalid(format!(
            "lp alpha must be non-negative, got {}",
            cfg.alpha
        )));
    }
    let n = g.node_count();
    let mut table = ScoreTable::zeros("lp", n);
    table.par_fill_rows(|i, row| {
        let mut two = vec![0u64; n];
        for &z in g.neighbors(i) {
            for &w in g.neighbors(z) {
                two[w] += 1;
            }
        }
        let mut three = vec![0u64; n];
        for (w, &c) in two.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &j in g.neighbors(w) {
                three[j] += c;
            }
        }
        for (k, slot) in row.iter_mut().enumerate() {
            let j = i + 1 + k;
            *slot = two[j] as f64 + cfg.alpha * three[j] as f64;
        }
    });
    Ok(table)
}
