//! Topological strength weighting and iterative weighted rich-club
//! decomposition for simple undirected networks.
//!
//! The pipeline: assign each edge a weight from the degrees and common
//! neighborhood of its endpoints, sum those into a per-node strength
//! `delta`, compare the top-strength induced weight share against a
//! degree- and weight-preserving null model, and iteratively peel off
//! the maximizing node sets ("weighted rich clubs") until the quality
//! of the extracted layer drops below a threshold. What remains is the
//! sparse part: peripheral nodes plus structurally special core nodes.

pub mod decompose;
pub mod error;
pub mod evaluation;
pub mod export;
pub mod generators;
pub mod graph;
pub mod null_model;
pub mod rich_club;
pub mod seed;
pub mod weights;

pub use decompose::{run_itrich, Club, Decomposition, DecomposeConfig, ThresholdPolicy};
pub use error::{Error, Result};
pub use graph::{EdgeListFormat, Graph, KShellResult, LoadDiagnostics};
pub use null_model::{build_ensemble, configuration_rewire, shuffle_weights, NullEnsemble, NullModelSample};
pub use rich_club::{phi_unweighted, phi_weighted, rank_by_delta, rho_curve, RankedNodes, RhoCurve};
pub use weights::{compute_weighted_graph, WeightSummary, WeightedGraph};

/// Internal node identifier: dense indices `0..N`.
pub type NodeId = usize;
