//! Finite-step walk propagation and the walk-based similarity indices.
//!
//! Propagation is exact: `π_i(t) = π_i(t-1) · PR`, starting from the
//! indicator of the source. Scores combine the reach probabilities of both
//! endpoints weighted by their share of the degree sum:
//!
//! ```text
//! LRW_ij(t)  = k_i/2|E| · π_ij(t) + k_j/2|E| · π_ji(t)
//! SRW_ij(t)  = Σ_{l=1..t} LRW_ij(l)
//! MIRW_ij(t) = SRW_ij(t) with PR replaced by the AMI transition matrix
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{graph_stats, Graph, NodeId};
use crate::influence::{ami_transition_matrix, InfluenceConfig};
use crate::scores::ScoreTable;
use crate::transition::{uniform_transition_matrix, TransitionMatrix};

pub const MIN_WALK_LENGTH: usize = 2;
pub const MAX_WALK_LENGTH: usize = 7;

/// Distribution of a single walker after `step` steps from `source`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReachDistribution {
    pub source: NodeId,
    pub step: usize,
    pub probs: Vec<f64>,
}

fn indicator(n: usize, source: NodeId) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[source] = 1.0;
    v
}

pub fn propagate(p: &TransitionMatrix, source: NodeId, t: usize) -> Result<ReachDistribution> {
    let n = p.dim();
    if source >= n {
        return Err(Error::NodeIndex {
            index: source,
            node_count: n,
        });
    }
    let mut cur = indicator(n, source);
    let mut next = vec![0.0; n];
    for _ in 0..t {
        p.step(&cur, &mut next);
        std::mem::swap(&mut cur, &mut next);
    }
    Ok(ReachDistribution {
        source,
        step: t,
        probs: cur,
    })
}

fn require_walkable(g: &Graph, t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::invalid("walk length must be at least 1"));
    }
    if g.edge_count() == 0 {
        return Err(Error::UndefinedGraph(
            "walk scores need at least one edge".into(),
        ));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Accumulate {
    LastStep,
    Superposed,
}

/// Runs every source walker in lock-step for `t` steps and assembles the
/// per-step LRW tables, either keeping the last or summing all of them.
fn walk_scores(
    g: &Graph,
    p: &TransitionMatrix,
    t: usize,
    mode: Accumulate,
    method: &str,
) -> ScoreTable {
    let n = g.node_count();
    let two_m = 2.0 * g.edge_count() as f64;
    let weight: Vec<f64> = (0..n).map(|i| g.degree(i) as f64 / two_m).collect();

    let mut reach: Vec<Vec<f64>> = (0..n).map(|i| indicator(n, i)).collect();
    let mut total = ScoreTable::zeros(method, n);

    for _ in 1..=t {
        reach.par_iter_mut().for_each_init(
            || vec![0.0; n],
            |scratch, row| {
                p.step(row, scratch);
                row.copy_from_slice(scratch);
            },
        );

        let mut step_table = ScoreTable::zeros(method, n);
        step_table.par_fill_rows(|i, out| {
            for (k, slot) in out.iter_mut().enumerate() {
                let j = i + 1 + k;
                *slot = weight[i] * reach[i][j] + weight[j] * reach[j][i];
            }
        });

        match mode {
            Accumulate::LastStep => total = step_table,
            Accumulate::Superposed => total
                .values_mut()
                .iter_mut()
                .zip(step_table.values())
                .for_each(|(acc, s)| *acc += s),
        }
    }
    total
}

/// Local random walk similarity after exactly `t` steps.
pub fn lrw_score(g: &Graph, t: usize) -> Result<ScoreTable> {
    require_walkable(g, t)?;
    let p = uniform_transition_matrix(g);
    Ok(walk_scores(g, &p, t, Accumulate::LastStep, "lrw"))
}

/// Superposed random walk: LRW summed over steps `1..=t`.
pub fn srw_score(g: &Graph, t: usize) -> Result<ScoreTable> {
    require_walkable(g, t)?;
    let p = uniform_transition_matrix(g);
    Ok(walk_scores(g, &p, t, Accumulate::Superposed, "srw"))
}

/// Mutual-influence random walk: the superposed walk driven by the
/// AMI-normalised transition matrix.
pub fn mirw_score(g: &Graph, t: usize, cfg: &InfluenceConfig) -> Result<ScoreTable> {
    require_walkable(g, t)?;
    let p = ami_transition_matrix(g, cfg);
    Ok(walk_scores(g, &p, t, Accumulate::Superposed, "mirw"))
}

/// Superposed walk over an arbitrary transition matrix.
pub fn superposed_walk_score(g: &Graph, p: &TransitionMatrix, t: usize) -> Result<ScoreTable> {
    require_walkable(g, t)?;
    if p.dim() != g.node_count() {
        return Err(Error::invalid("transition matrix and graph differ in size"));
    }
    Ok(walk_scores(g, p, t, Accumulate::Superposed, "walk"))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RwrConfig {
    /// Probability of following an edge; the walker restarts otherwise.
    pub continue_prob: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RwrConfig {
    fn default() -> Self {
        RwrConfig {
            continue_prob: 0.85,
            tol: 1e-9,
            max_iter: 1000,
        }
    }
}

/// Steady state of a restarting walker and the L1 change of each iteration.
#[derive(Debug, Clone)]
pub struct RwrState {
    pub probs: Vec<f64>,
    pub residuals: Vec<f64>,
}

/// Fixed point of `q ← (1-c)·e_source + c·PRᵀ q`.
pub fn rwr_vector(p: &TransitionMatrix, source: NodeId, cfg: &RwrConfig) -> Result<RwrState> {
    let n = p.dim();
    if source >= n {
        return Err(Error::NodeIndex {
            index: source,
            node_count: n,
        });
    }
    let c = cfg.continue_prob;
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::invalid(format!(
            "restart continue probability {c} outside (0, 1)"
        )));
    }
    let mut q = indicator(n, source);
    let mut next = vec![0.0; n];
    let mut residuals = Vec::new();
    for _ in 0..cfg.max_iter {
        p.step(&q, &mut next);
        for x in next.iter_mut() {
            *x *= c;
        }
        next[source] += 1.0 - c;
        let residual: f64 = q.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut q, &mut next);
        residuals.push(residual);
        if residual < cfg.tol {
            return Ok(RwrState {
                probs: q,
                residuals,
            });
        }
    }
    Err(Error::Convergence {
        iterations: cfg.max_iter,
        residual: residuals.last().copied().unwrap_or(f64::INFINITY),
    })
}

/// Random walk with restart, symmetrised as `q_ij + q_ji`.
pub fn rwr_score(g: &Graph, cfg: &RwrConfig) -> Result<ScoreTable> {
    let n = g.node_count();
    let p = uniform_transition_matrix(g);
    let steady: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| rwr_vector(&p, i, cfg).map(|s| s.probs))
        .collect::<Result<_>>()?;
    let mut table = ScoreTable::zeros("rwr", n);
    table.par_fill_rows(|i, row| {
        for (k, slot) in row.iter_mut().enumerate() {
            let j = i + 1 + k;
            *slot = steady[i][j] + steady[j][i];
        }
    });
    Ok(table)
}

/// `round(aspl)` with ties rounding up, clamped to `[2, 7]`.
pub fn walk_length_for_aspl(aspl: f64) -> usize {
    let t = aspl.round();
    if t.is_nan() || t < MIN_WALK_LENGTH as f64 {
        MIN_WALK_LENGTH
    } else {
        (t as usize).min(MAX_WALK_LENGTH)
    }
}

/// Walk length derived from the average shortest path length of `g`.
pub fn select_walk_length(g: &Graph) -> Result<usize> {
    if g.edge_count() == 0 {
        return Err(Error::invalid(
            "cannot pick a walk length for an edgeless graph",
        ));
    }
    Ok(walk_length_for_aspl(graph_stats(g).aspl))
}
