//! Link prediction on undirected networks.
//!
//! The crate scores unobserved node pairs with nine similarity indices and
//! evaluates them on repeated random hold-out splits:
//!
//! * local indices: Jaccard, resource allocation, Adamic–Adar and the
//!   clustering-coefficient index ([`local`]);
//! * the local path index `A² + αA³` ([`local::local_path`]);
//! * walk indices: local random walk, superposed random walk, random walk
//!   with restart, and the mutual-influence random walk whose transition
//!   probabilities follow the asymmetric mutual influence between
//!   neighbours ([`walkers`], [`influence`]).
//!
//! [`eval`] holds the train/test split, AUC, top-L precision, ROC points and
//! the seeded benchmark driver; [`cli`] wires it to the `linkpred` binary.
//!
//! ```
//! use linkpred::graph::load_edge_list;
//! use linkpred::influence::InfluenceConfig;
//! use linkpred::walkers::mirw_score;
//!
//! let g = load_edge_list("a b\nb c\nc a\nc d\n".as_bytes()).unwrap();
//! let scores = mirw_score(&g, 3, &InfluenceConfig::default()).unwrap();
//! let (a, d) = (g.node_by_label("a").unwrap(), g.node_by_label("d").unwrap());
//! assert!(scores.get(a, d) > 0.0);
//! ```

pub mod cli;
pub mod datasets;
pub mod error;
pub mod eval;
pub mod graph;
pub mod influence;
pub mod local;
pub mod scores;
pub mod transition;
pub mod walkers;

pub use error::{Error, Result};
pub use graph::{Graph, GraphStats, NodeId};
pub use scores::ScoreTable;
pub use transition::TransitionMatrix;
