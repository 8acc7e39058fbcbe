//! Mutual information and asymmetric mutual influence between node pairs,
//! and the influence-biased transition matrix built from them.
//!
//! All quantities derive from neighbourhood counts:
//!
//! * `P_i = k_i / N`, the prior of node `i`;
//! * `CN(i, j)`, the shared-neighbour count (optionally counting the two
//!   endpoints themselves, see [`CnMode`]);
//! * `MI(i, j) = P_ij ln(P_ij / (P_i P_j))` with `P_ij = CN(i, j) / N`;
//! * `AMI(i, j)`, the influence `i` exerts on `j`, with
//!   `P_ij = P_i CN(i, j) / Σ_{k ∈ Γ(j)} CN(j, k)`.
//!
//! Natural logarithms are used throughout. The biased transition matrix is
//! invariant to the log base because each row is normalised.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{intersection_count, Graph, NodeId};
use crate::transition::TransitionMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CnMode {
    /// `|Γ(i) ∩ Γ(j)|`.
    Raw,
    /// `|Γ(i) ∩ Γ(j)| + 2`: the pair itself is counted along with its
    /// shared neighbours.
    #[default]
    PlusTwo,
}

/// How negative AMI values enter the transition matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NegativeAmi {
    #[default]
    ClampZero,
}

/// Which AMI orientation weights the step `i → j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Weight `AMI(i, j)`, the influence the current node exerts on `j`.
    #[default]
    Literal,
    /// Weight `AMI(j, i)`, the influence the current node receives from `j`.
    Received,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct InfluenceConfig {
    pub cn_mode: CnMode,
    pub negative_ami: NegativeAmi,
    pub direction: Direction,
}

impl InfluenceConfig {
    pub fn new(cn_mode: CnMode, direction: Direction) -> Self {
        InfluenceConfig {
            cn_mode,
            negative_ami: NegativeAmi::ClampZero,
            direction,
        }
    }
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.node_count() == 0 {
        Err(Error::UndefinedGraph("graph has no nodes".into()))
    } else {
        Ok(())
    }
}

fn require_distinct(i: NodeId, j: NodeId) -> Result<()> {
    if i == j {
        Err(Error::invalid(format!(
            "pair ({i}, {j}) must have distinct endpoints"
        )))
    } else {
        Ok(())
    }
}

/// `P_i = k_i / N`.
pub fn node_prior(g: &Graph, i: NodeId) -> Result<f64> {
    require_nonempty(g)?;
    g.check_node(i)?;
    Ok(g.degree(i) as f64 / g.node_count() as f64)
}

fn cn_unchecked(g: &Graph, i: NodeId, j: NodeId, mode: CnMode) -> usize {
    let shared = intersection_count(g.neighbors(i), g.neighbors(j));
    match mode {
        CnMode::Raw => shared,
        CnMode::PlusTwo => shared + 2,
    }
}

pub fn cn(g: &Graph, i: NodeId, j: NodeId, cfg: &InfluenceConfig) -> Result<usize> {
    g.check_node(i)?;
    g.check_node(j)?;
    require_distinct(i, j)?;
    Ok(cn_unchecked(g, i, j, cfg.cn_mode))
}

/// `p_joint · ln(p_joint / (p_i · p_j))`, taken as 0 whenever any of the
/// probabilities vanishes.
pub fn information_term(p_joint: f64, p_i: f64, p_j: f64) -> f64 {
    if p_joint <= 0.0 || p_i <= 0.0 || p_j <= 0.0 {
        0.0
    } else {
        p_joint * (p_joint / (p_i * p_j)).ln()
    }
}

/// Symmetric node-pair mutual information.
pub fn mutual_information(g: &Graph, i: NodeId, j: NodeId, cfg: &InfluenceConfig) -> Result<f64> {
    let c = cn(g, i, j, cfg)?;
    let n = g.node_count() as f64;
    let p_i = g.degree(i) as f64 / n;
    let p_j = g.degree(j) as f64 / n;
    Ok(information_term(c as f64 / n, p_i, p_j))
}

/// AMI from its ingredient quantities. `cn_sum_j` is `Σ_{k ∈ Γ(j)} CN(j, k)`.
pub fn ami_from_parts(p_i: f64, p_j: f64, cn_ij: f64, cn_sum_j: f64) -> f64 {
    if cn_sum_j <= 0.0 {
        return 0.0;
    }
    information_term(p_i * cn_ij / cn_sum_j, p_i, p_j)
}

/// Influence node `i` exerts on node `j`. May be negative.
pub fn ami(g: &Graph, i: NodeId, j: NodeId, cfg: &InfluenceConfig) -> Result<f64> {
    g.check_node(i)?;
    g.check_node(j)?;
    require_distinct(i, j)?;
    Ok(InfluenceModel::new(g, *cfg).ami(i, j))
}

/// Precomputed priors and `Σ_{k ∈ Γ(j)} CN(j, k)` for repeated AMI queries
/// on one graph.
#[derive(Debug)]
pub struct InfluenceModel<'g> {
    graph: &'g Graph,
    cfg: InfluenceConfig,
    priors: Vec<f64>,
    cn_sums: Vec<f64>,
}

impl<'g> InfluenceModel<'g> {
    pub fn new(graph: &'g Graph, cfg: InfluenceConfig) -> Self {
        let n = graph.node_count();
        let priors = (0..n).map(|i| graph.degree(i) as f64 / n as f64).collect();
        let cn_sums = (0..n)
            .into_par_iter()
            .map(|j| {
                graph
                    .neighbors(j)
                    .iter()
                    .map(|&k| cn_unchecked(graph, j, k, cfg.cn_mode) as f64)
                    .sum()
            })
            .collect();
        InfluenceModel {
            graph,
            cfg,
            priors,
            cn_sums,
        }
    }

    pub fn prior(&self, i: NodeId) -> f64 {
        self.priors[i]
    }

    pub fn cn_sum(&self, j: NodeId) -> f64 {
        self.cn_sums[j]
    }

    pub fn ami(&self, i: NodeId, j: NodeId) -> f64 {
        let c = cn_unchecked(self.graph, i, j, self.cfg.cn_mode) as f64;
        ami_from_parts(self.priors[i], self.priors[j], c, self.cn_sums[j])
    }

    /// Weight of the step `i → j` before normalisation, per the configured
    /// direction.
    pub fn step_weight(&self, i: NodeId, j: NodeId) -> f64 {
        match self.cfg.direction {
            Direction::Literal => self.ami(i, j),
            Direction::Received => self.ami(j, i),
        }
    }
}

/// Transition matrix with `PR_ij ∝ max(weight(i, j), 0)` over `j ∈ Γ(i)`.
///
/// Rows whose clamped weights are all zero fall back to the uniform row;
/// isolated nodes get a self-loop.
pub fn biased_transition_matrix<F>(g: &Graph, weight: F) -> TransitionMatrix
where
    F: Fn(NodeId, NodeId) -> f64 + Sync,
{
    let rows: Vec<Vec<(NodeId, f64)>> = (0..g.node_count())
        .into_par_iter()
        .map(|i| {
            let nbrs = g.neighbors(i);
            let w: Vec<(NodeId, f64)> = nbrs
                .iter()
                .map(|&j| {
                    let x = weight(i, j);
                    (j, if x.is_finite() && x > 0.0 { x } else { 0.0 })
                })
                .collect();
            if w.iter().all(|&(_, x)| x == 0.0) {
                nbrs.iter().map(|&j| (j, 1.0)).collect()
            } else {
                w
            }
        })
        .collect();
    TransitionMatrix::from_weighted_rows(rows)
}

/// The AMI-normalised transition matrix driving the mutual-influence walk.
pub fn ami_transition_matrix(g: &Graph, cfg: &InfluenceConfig) -> TransitionMatrix {
    let model = InfluenceModel::new(g, *cfg);
    match cfg.negative_ami {
        NegativeAmi::ClampZero => biased_transition_matrix(g, |i, j| model.step_weight(i, j)),
    }
}
