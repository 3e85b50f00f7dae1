//! Topological edge weights and node strengths.
//!
//! An edge (i, j) is weighted by how embedded it is in its joint
//! neighborhood: `w(i,j) = k * |N(i) ∩ N(j)| * H(d(i), d(j))` with
//! `k = 1 / ((N-1)^2 (N-2))` and `H` the harmonic mean of the endpoint
//! degrees. The strength `delta(i)` of a node is the sum of its
//! incident edge weights; it lies in [0, 1] and reaches 1 exactly on a
//! clique. Weights are computed once on the full graph and inherited,
//! never recomputed, when nodes are deleted.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{sorted_intersection_len, Graph};
use crate::NodeId;

/// A graph together with its derived edge weights and node strengths.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    graph: Graph,
    edge_weight: Vec<f64>,
    delta: Vec<f64>,
    /// Per node: (neighbor, index into `edge_weight`).
    incident: Vec<Vec<(NodeId, usize)>>,
    total_weight: f64,
}

/// The three means tied by `mean_delta = mean_weight * mean_degree`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSummary {
    pub mean_weight: f64,
    pub mean_degree: f64,
    pub mean_delta: f64,
}

/// Normalization factor `1 / ((N-1)^2 (N-2))`.
pub fn normalization(node_count: usize) -> Result<f64> {
    if node_count < 3 {
        return Err(Error::TooFewNodes(node_count));
    }
    let n = node_count as f64;
    Ok(1.0 / ((n - 1.0) * (n - 1.0) * (n - 2.0)))
}

/// Weight of the (i, j) edge; zero when i and j are not adjacent.
pub fn edge_weight(g: &Graph, i: NodeId, j: NodeId) -> Result<f64> {
    let k = normalization(g.node_count())?;
    if i >= g.node_count() {
        return Err(Error::UnknownNode(i));
    }
    if j >= g.node_count() {
        return Err(Error::UnknownNode(j));
    }
    if i == j {
        return Err(Error::IdenticalNodes(i));
    }
    if !g.has_edge(i, j) {
        return Ok(0.0);
    }
    let common = g.common_neighbors(i, j)? as f64;
    let di = g.neighbors(i).len() as f64;
    let dj = g.neighbors(j).len() as f64;
    // endpoints of an edge have degree >= 1, harmonic mean is defined
    let harmonic = 2.0 * di * dj / (di + dj);
    Ok(k * common * harmonic)
}

/// Compute all edge weights and strengths for `g`.
pub fn compute_weighted_graph(g: &Graph) -> Result<WeightedGraph> {
    let k = normalization(g.node_count())?;
    let edges = g.edges();
    let edge_weight: Vec<f64> = edges
        .par_iter()
        .map(|&(a, b)| {
            let common = sorted_intersection_len(g.neighbors(a), g.neighbors(b)) as f64;
            let da = g.neighbors(a).len() as f64;
            let db = g.neighbors(b).len() as f64;
            k * common * (2.0 * da * db / (da + db))
        })
        .collect();

    let mut incident = vec![Vec::new(); g.node_count()];
    for (idx, &(a, b)) in edges.iter().enumerate() {
        incident[a].push((b, idx));
        incident[b].push((a, idx));
    }
    let mut delta = vec![0.0; g.node_count()];
    for (i, inc) in incident.iter().enumerate() {
        delta[i] = inc.iter().map(|&(_, e)| edge_weight[e]).sum();
    }
    let total_weight = edge_weight.iter().sum();
    Ok(WeightedGraph {
        graph: g.clone(),
        edge_weight,
        delta,
        incident,
        total_weight,
    })
}

impl WeightedGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Weights aligned with `graph().edges()`.
    pub fn edge_weights(&self) -> &[f64] {
        &self.edge_weight
    }

    pub fn delta(&self, i: NodeId) -> f64 {
        self.delta[i]
    }

    pub fn deltas(&self) -> &[f64] {
        &self.delta
    }

    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    /// (neighbor, edge index) pairs for `i`.
    pub fn incident(&self, i: NodeId) -> &[(NodeId, usize)] {
        &self.incident[i]
    }

    pub fn weight_summary(&self) -> Result<WeightSummary> {
        let m = self.graph.edge_count();
        if m == 0 {
            return Err(Error::NoEdges);
        }
        let n = self.graph.node_count() as f64;
        let mean_weight = self.total_weight / m as f64;
        let mean_degree = 2.0 * m as f64 / n;
        let mean_delta = self.delta.iter().sum::<f64>() / n;
        Ok(WeightSummary {
            mean_weight,
            mean_degree,
            mean_delta,
        })
    }

    /// Strengths restricted to the subgraph induced by `keep`, using the
    /// inherited full-graph weights. Returns (node, delta) pairs in the
    /// order of `keep`.
    pub fn delta_of_subgraph(&self, keep: &[NodeId]) -> Result<Vec<(NodeId, f64)>> {
        let mut selected = vec![false; self.graph.node_count()];
        for &i in keep {
            if i >= self.graph.node_count() {
                return Err(Error::UnknownNode(i));
            }
            selected[i] = true;
        }
        Ok(keep
            .iter()
            .map(|&i| {
                let d = self.incident[i]
                    .iter()
                    .filter(|&&(nbr, _)| selected[nbr])
                    .map(|&(_, e)| self.edge_weight[e])
                    .sum();
                (i, d)
            })
            .collect())
    }

    /// Materialize the induced weighted subgraph on `keep` with
    /// inherited (bit-identical) edge weights. Node order in the result
    /// follows `keep`.
    pub fn induce(&self, keep: &[NodeId]) -> Result<WeightedSubgraph> {
        let n = self.graph.node_count();
        let mut local_of = vec![usize::MAX; n];
        for (local, &orig) in keep.iter().enumerate() {
            if orig >= n {
                return Err(Error::UnknownNode(orig));
            }
            local_of[orig] = local;
        }
        let mut edges = Vec::new();
        let mut weights = Vec::new();
        for (idx, &(a, b)) in self.graph.edges().iter().enumerate() {
            if local_of[a] != usize::MAX && local_of[b] != usize::MAX {
                let (x, y) = (local_of[a], local_of[b]);
                edges.push((x.min(y), x.max(y)));
                weights.push(self.edge_weight[idx]);
            }
        }
        let mut delta = vec![0.0; keep.len()];
        for (e, &(a, b)) in edges.iter().enumerate() {
            delta[a] += weights[e];
            delta[b] += weights[e];
        }
        let total_weight = weights.iter().sum();
        Ok(WeightedSubgraph {
            nodes: keep.to_vec(),
            edges,
            weights,
            delta,
            total_weight,
        })
    }
}

/// An induced subgraph carrying inherited weights; node ids are local
/// (indices into `nodes`, which maps back to the parent graph).
#[derive(Debug, Clone)]
pub struct WeightedSubgraph {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<f64>,
    pub delta: Vec<f64>,
    pub total_weight: f64,
}

impl WeightedSubgraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn mean_delta(&self) -> f64 {
        if self.nodes.is_empty() {
            return 0.0;
        }
        self.delta.iter().sum::<f64>() / self.nodes.len() as f64
    }
}
