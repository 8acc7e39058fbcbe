//! Undirected simple graphs, edge-list ingestion and topological statistics.
//!
//! Nodes are addressed by dense indices `0..N`; the external label of each
//! node is kept alongside for reporting. Adjacency lists are sorted, which
//! lets neighbourhood intersections run as linear merges.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on nodes `0..node_count` labelled by their index.
    ///
    /// Duplicate edges and self-loops are dropped, as in [`load_edge_list`].
    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let mut builder = GraphBuilder::default();
        for i in 0..node_count {
            builder.add_node(&i.to_string());
        }
        for &(a, b) in edges {
            if a >= node_count || b >= node_count {
                return Err(Error::NodeIndex {
                    index: a.max(b),
                    node_count,
                });
            }
            builder.add_edge_by_index(a, b);
        }
        Ok(builder.build())
    }

    pub fn empty() -> Self {
        GraphBuilder::default().build()
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbour list Γ(i).
    pub fn neighbors(&self, i: NodeId) -> &[NodeId] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: NodeId) -> usize {
        self.adjacency[i].len()
    }

    pub fn has_edge(&self, i: NodeId, j: NodeId) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn label(&self, i: NodeId) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Returns `Ok(())` if `i` is a valid node index.
    pub fn check_node(&self, i: NodeId) -> Result<()> {
        if i < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeIndex {
                index: i,
                node_count: self.node_count(),
            })
        }
    }

    /// Copy of this graph with the given edges removed. Every node and label
    /// is kept, so nodes may become isolated.
    pub fn without_edges(&self, removed: &HashSet<(NodeId, NodeId)>) -> Graph {
        let mut edge_count = 0;
        let adjacency: Vec<Vec<NodeId>> = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(i, nbrs)| {
                let kept: Vec<NodeId> = nbrs
                    .iter()
                    .copied()
                    .filter(|&j| !removed.contains(&(i.min(j), i.max(j))))
                    .collect();
                edge_count += kept.len();
                kept
            })
            .collect();
        Graph {
            adjacency,
            labels: self.labels.clone(),
            index: self.index.clone(),
            edge_count: edge_count / 2,
        }
    }
}

/// Incremental graph construction keyed by external labels.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    adjacency: Vec<HashSet<NodeId>>,
    diagnostics: LoadDiagnostics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOutcome {
    Added,
    Duplicate,
    SelfLoop,
}

impl GraphBuilder {
    /// Returns the index for `label`, allocating the next dense index on
    /// first sight.
    pub fn add_node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.adjacency.push(HashSet::new());
        id
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> EdgeOutcome {
        let a = self.add_node(a);
        let b = self.add_node(b);
        self.add_edge_by_index(a, b)
    }

    fn add_edge_by_index(&mut self, a: NodeId, b: NodeId) -> EdgeOutcome {
        if a == b {
            self.diagnostics.self_loops += 1;
            return EdgeOutcome::SelfLoop;
        }
        if !self.adjacency[a].insert(b) {
            self.diagnostics.duplicates += 1;
            return EdgeOutcome::Duplicate;
        }
        self.adjacency[b].insert(a);
        EdgeOutcome::Added
    }

    pub fn diagnostics(&self) -> &LoadDiagnostics {
        &self.diagnostics
    }

    pub fn build(self) -> Graph {
        let adjacency: Vec<Vec<NodeId>> = self
            .adjacency
            .into_iter()
            .map(|set| {
                let mut v: Vec<NodeId> = set.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            labels: self.labels,
            index: self.index,
            edge_count,
        }
    }
}

/// Counts of what the loader skipped or collapsed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LoadDiagnostics {
    pub edge_lines: usize,
    pub comment_lines: usize,
    pub duplicates: usize,
    pub self_loops: usize,
}

/// Parses a whitespace-separated edge list. Lines starting with `#` or `%`
/// and blank lines are ignored; every other line must hold exactly two
/// labels. Edges are undirected.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    load_edge_list_with_diagnostics(reader).map(|(g, _)| g)
}

pub fn load_edge_list_with_diagnostics<R: BufRead>(reader: R) -> Result<(Graph, LoadDiagnostics)> {
    let mut builder = GraphBuilder::default();
    let mut comment_lines = 0;
    let mut edge_lines = 0;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') || trimmed.starts_with('%') {
            comment_lines += 1;
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => {
                builder.add_edge(a, b);
                edge_lines += 1;
            }
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!(
                        "expected two node labels, found {} token(s)",
                        trimmed.split_whitespace().count()
                    ),
                })
            }
        }
    }
    let mut diagnostics = builder.diagnostics().clone();
    diagnostics.comment_lines = comment_lines;
    diagnostics.edge_lines = edge_lines;
    if diagnostics.duplicates > 0 || diagnostics.self_loops > 0 {
        log::info!(
            "edge list: dropped {} duplicate edge(s) and {} self-loop(s)",
            diagnostics.duplicates,
            diagnostics.self_loops
        );
    }
    Ok((builder.build(), diagnostics))
}

pub fn load_edge_list_file(path: impl AsRef<Path>) -> Result<Graph> {
    let file = File::open(path)?;
    load_edge_list(BufReader::new(file))
}

pub(crate) fn intersection_count(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut x, mut y, mut n) = (0, 0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                x += 1;
                y += 1;
            }
        }
    }
    n
}

/// Γ(i) ∩ Γ(j), sorted.
pub fn common_neighbors(g: &Graph, i: NodeId, j: NodeId) -> Result<Vec<NodeId>> {
    g.check_node(i)?;
    g.check_node(j)?;
    let (a, b) = (g.neighbors(i), g.neighbors(j));
    let mut out = Vec::new();
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[x]);
                x += 1;
                y += 1;
            }
        }
    }
    Ok(out)
}

/// Local clustering coefficient; 0 for nodes of degree below two.
pub fn local_clustering(g: &Graph, v: NodeId) -> Result<f64> {
    g.check_node(v)?;
    Ok(clustering_unchecked(g, v))
}

pub(crate) fn clustering_unchecked(g: &Graph, v: NodeId) -> f64 {
    let nbrs = g.neighbors(v);
    let k = nbrs.len();
    if k < 2 {
        return 0.0;
    }
    // each link among Γ(v) is seen from both endpoints
    let twice_links: usize = nbrs
        .iter()
        .map(|&u| intersection_count(g.neighbors(u), nbrs))
        .sum();
    twice_links as f64 / (k * (k - 1)) as f64
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphStats {
    pub node_count: usize,
    pub edge_count: usize,
    /// ⟨K⟩ = 2|E|/N.
    pub avg_degree: f64,
    /// Mean local clustering over all nodes.
    pub avg_clustering: f64,
    /// Mean local clustering over nodes of degree two or more.
    pub avg_clustering_nontrivial: f64,
    /// Mean distance over reachable ordered pairs; 0 if none.
    pub aspl: f64,
    pub diameter: usize,
}

/// Hop distances from `source`; `None` for unreachable nodes.
pub fn bfs_distances(g: &Graph, source: NodeId) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0) + 1;
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let n = g.node_count();
    let clustering: Vec<f64> = (0..n).map(|v| clustering_unchecked(g, v)).collect();
    let avg_clustering = if n == 0 {
        0.0
    } else {
        clustering.iter().sum::<f64>() / n as f64
    };
    let nontrivial: Vec<f64> = (0..n)
        .filter(|&v| g.degree(v) >= 2)
        .map(|v| clustering[v])
        .collect();
    let avg_clustering_nontrivial = if nontrivial.is_empty() {
        0.0
    } else {
        nontrivial.iter().sum::<f64>() / nontrivial.len() as f64
    };

    let (dist_sum, pairs, diameter) = (0..n)
        .into_par_iter()
        .map(|s| {
            bfs_distances(g, s)
                .into_iter()
                .flatten()
                .filter(|&d| d > 0)
                .fold((0u64, 0u64, 0usize), |(sum, cnt, max), d| {
                    (sum + d as u64, cnt + 1, max.max(d))
                })
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2.max(b.2)));

    GraphStats {
        node_count: n,
        edge_count: g.edge_count(),
        avg_degree: if n == 0 {
            0.0
        } else {
            2.0 * g.edge_count() as f64 / n as f64
        },
        avg_clustering,
        avg_clustering_nontrivial,
        aspl: if pairs == 0 {
            0.0
        } else {
            dist_sum as f64 / pairs as f64
        },
        diameter,
    }
}
