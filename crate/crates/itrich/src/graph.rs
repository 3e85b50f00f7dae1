//! Simple undirected graph with dense internal ids and external string
//! labels, plus the degree/neighborhood queries and the k-core peeling
//! used as a comparison baseline.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::NodeId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeListFormat {
    Whitespace,
    Csv,
}

/// Counters describing what ingestion did to the raw file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadDiagnostics {
    /// Lines that repeated an edge already present (either orientation).
    pub duplicate_edges: usize,
    /// Comment or blank lines skipped.
    pub skipped_lines: usize,
    /// Nodes registered from an attribute file without any incident edge.
    pub isolated_registered: usize,
}

/// Immutable simple undirected graph. No loops, no multi-edges,
/// internal ids dense in `0..node_count()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<NodeId>>,
    edges: Vec<(NodeId, NodeId)>,
    labels: Vec<String>,
}

impl Graph {
    /// Build from (label, label) pairs. Duplicate and reversed pairs
    /// collapse to one edge; self-pairs are rejected.
    pub fn from_labeled_edges<I, S>(pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut builder = GraphBuilder::new();
        for (a, b) in pairs {
            builder.add_edge(a.as_ref(), b.as_ref())?;
        }
        Ok(builder.build())
    }

    /// Read an edge list: one edge per line, two tokens, `#` comments.
    pub fn load_edge_list<P: AsRef<Path>>(path: P, format: EdgeListFormat) -> Result<(Graph, LoadDiagnostics)> {
        let file = std::fs::File::open(path.as_ref())?;
        Self::parse_edge_list(BufReader::new(file), format, &path.as_ref().display().to_string())
    }

    /// Edge-list parsing against any reader; `source` names the input in errors.
    pub fn parse_edge_list<R: Read>(
        reader: R,
        format: EdgeListFormat,
        source: &str,
    ) -> Result<(Graph, LoadDiagnostics)> {
        let mut builder = GraphBuilder::new();
        let mut diag = LoadDiagnostics::default();
        for (idx, line) in BufReader::new(reader).lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                diag.skipped_lines += 1;
                continue;
            }
            let mut tokens = match format {
                EdgeListFormat::Whitespace => trimmed.split_whitespace(),
                EdgeListFormat::Csv => trimmed.split(','),
            };
            let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(a), Some(b), None) => (a.trim(), b.trim()),
                _ => {
                    return Err(Error::Parse {
                        path: source.into(),
                        line: lineno,
                        message: format!("expected two node tokens, got '{trimmed}'"),
                    })
                }
            };
            if a.is_empty() || b.is_empty() {
                return Err(Error::Parse {
                    path: source.into(),
                    line: lineno,
                    message: "empty node token".into(),
                });
            }
            if a == b {
                return Err(Error::SelfLoop {
                    path: source.into(),
                    line: lineno,
                    token: a.to_string(),
                });
            }
            if !builder.add_edge(a, b)? {
                diag.duplicate_edges += 1;
            }
        }
        Ok((builder.build(), diag))
    }

    /// Load an edge list plus a `node,attribute` CSV. Attribute tokens
    /// not present in the edge list are registered as isolated nodes,
    /// so datasets whose node set exceeds their edge support keep their
    /// full size. Returns per-node attributes aligned to internal ids.
    pub fn load_edge_list_with_attrs<P: AsRef<Path>, Q: AsRef<Path>>(
        edge_path: P,
        format: EdgeListFormat,
        attr_path: Q,
    ) -> Result<(Graph, Vec<Option<String>>, LoadDiagnostics)> {
        let file = std::fs::File::open(edge_path.as_ref())?;
        let source = edge_path.as_ref().display().to_string();
        let mut builder = GraphBuilder::new();
        let mut diag = LoadDiagnostics::default();
        {
            let (graph, d) = Self::parse_edge_list(BufReader::new(file), format, &source)?;
            diag = d;
            builder.absorb(graph);
        }
        let attr_source = attr_path.as_ref().display().to_string();
        let attr_file = std::fs::File::open(attr_path.as_ref())?;
        let mut attrs_by_label: Vec<(String, String)> = Vec::new();
        for (idx, line) in BufReader::new(attr_file).lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (node, attr) = trimmed.split_once(',').ok_or_else(|| Error::Parse {
                path: attr_source.clone(),
                line: idx + 1,
                message: format!("expected 'node,attribute', got '{trimmed}'"),
            })?;
            attrs_by_label.push((node.trim().to_string(), attr.trim().to_string()));
        }
        for (label, _) in &attrs_by_label {
            let known = builder.labels.len();
            if builder.intern(label) >= known {
                diag.isolated_registered += 1;
            }
        }
        let graph = builder.build();
        let mut attrs = vec![None; graph.node_count()];
        for (label, attr) in attrs_by_label {
            let id = graph.node_by_label(&label).expect("attr labels were interned");
            attrs[id] = Some(attr);
        }
        Ok((graph, attrs, diag))
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` edge pairs in insertion order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn label(&self, i: NodeId) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degree(&self, i: NodeId) -> Result<usize> {
        self.adj.get(i).map(Vec::len).ok_or(Error::UnknownNode(i))
    }

    /// Sorted neighbor list of `i`.
    pub fn neighbors(&self, i: NodeId) -> &[NodeId] {
        &self.adj[i]
    }

    pub fn has_edge(&self, i: NodeId, j: NodeId) -> bool {
        match self.adj.get(i) {
            Some(nbrs) => nbrs.binary_search(&j).is_ok(),
            None => false,
        }
    }

    /// `|N(i) ∩ N(j)|`. Neighborhoods are open, so adjacency of i and j
    /// itself never counts.
    pub fn common_neighbors(&self, i: NodeId, j: NodeId) -> Result<usize> {
        if i >= self.adj.len() {
            return Err(Error::UnknownNode(i));
        }
        if j >= self.adj.len() {
            return Err(Error::UnknownNode(j));
        }
        if i == j {
            return Err(Error::IdenticalNodes(i));
        }
        Ok(sorted_intersection_len(&self.adj[i], &self.adj[j]))
    }

    /// Subgraph induced by `keep`; labels carried over, ids recompacted
    /// in ascending order of the original ids.
    pub fn induced_subgraph(&self, keep: &[NodeId]) -> Result<Graph> {
        let mut selected = vec![false; self.node_count()];
        for &i in keep {
            if i >= self.node_count() {
                return Err(Error::UnknownNode(i));
            }
            selected[i] = true;
        }
        let mut remap = vec![usize::MAX; self.node_count()];
        let mut labels = Vec::new();
        for (i, &sel) in selected.iter().enumerate() {
            if sel {
                remap[i] = labels.len();
                labels.push(self.labels[i].clone());
            }
        }
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if selected[a] && selected[b] {
                let (x, y) = (remap[a], remap[b]);
                edges.push((x.min(y), x.max(y)));
            }
        }
        let mut adj = vec![Vec::new(); labels.len()];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { adj, edges, labels })
    }

    /// Core-number peeling. Returns per-node core numbers and the
    /// shell partition (nodes whose core number is exactly k).
    pub fn k_shell_decomposition(&self) -> KShellResult {
        let n = self.node_count();
        let mut degree: Vec<usize> = (0..n).map(|i| self.adj[i].len()).collect();
        let max_deg = degree.iter().copied().max().unwrap_or(0);

        // bucket sort nodes by current degree
        let mut bins = vec![0usize; max_deg + 2];
        for &d in &degree {
            bins[d] += 1;
        }
        let mut start = 0;
        for d in 0..=max_deg {
            let count = bins[d];
            bins[d] = start;
            start += count;
        }
        let mut order = vec![0usize; n];
        let mut pos = vec![0usize; n];
        {
            let mut next = bins.clone();
            for i in 0..n {
                pos[i] = next[degree[i]];
                order[pos[i]] = i;
                next[degree[i]] += 1;
            }
        }

        let mut core = degree.clone();
        for idx in 0..n {
            let v = order[idx];
            core[v] = degree[v];
            for nbr_idx in 0..self.adj[v].len() {
                let u = self.adj[v][nbr_idx];
                if degree[u] > degree[v] {
                    // swap u toward the front of its bin, then shrink it
                    let du = degree[u];
                    let pu = pos[u];
                    let pw = bins[du];
                    let w = order[pw];
                    if u != w {
                        order.swap(pu, pw);
                        pos[u] = pw;
                        pos[w] = pu;
                    }
                    bins[du] += 1;
                    degree[u] -= 1;
                }
            }
        }

        let mut shells: BTreeMap<usize, Vec<NodeId>> = BTreeMap::new();
        for (i, &k) in core.iter().enumerate() {
            shells.entry(k).or_default().push(i);
        }
        KShellResult { core_number: core, shells }
    }

    /// Serialize back to an edge-list string (whitespace format).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[a], self.labels[b]);
        }
        out
    }
}

/// Result of the degree-peeling decomposition.
#[derive(Debug, Clone)]
pub struct KShellResult {
    pub core_number: Vec<usize>,
    pub shells: BTreeMap<usize, Vec<NodeId>>,
}

impl KShellResult {
    /// Nodes with core number >= k.
    pub fn core(&self, k: usize) -> Vec<NodeId> {
        self.core_number
            .iter()
            .enumerate()
            .filter(|(_, &c)| c >= k)
            .map(|(i, _)| i)
            .collect()
    }
}

pub(crate) fn sorted_intersection_len(a: &[NodeId], b: &[NodeId]) -> usize {
    let mut count = 0;
    let mut ia = 0;
    let mut ib = 0;
    while ia < a.len() && ib < b.len() {
        match a[ia].cmp(&b[ib]) {
            std::cmp::Ordering::Less => ia += 1,
            std::cmp::Ordering::Greater => ib += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                ia += 1;
                ib += 1;
            }
        }
    }
    count
}

struct GraphBuilder {
    ids: HashMap<String, NodeId>,
    labels: Vec<String>,
    edges: Vec<(NodeId, NodeId)>,
    seen: HashMap<(NodeId, NodeId), ()>,
}

impl GraphBuilder {
    fn new() -> Self {
        GraphBuilder {
            ids: HashMap::new(),
            labels: Vec::new(),
            edges: Vec::new(),
            seen: HashMap::new(),
        }
    }

    fn intern(&mut self, label: &str) -> NodeId {
        match self.ids.entry(label.to_string()) {
            Entry::Occupied(e) => *e.get(),
            Entry::Vacant(e) => {
                let id = self.labels.len();
                self.labels.push(label.to_string());
                e.insert(id);
                id
            }
        }
    }

    /// Returns Ok(false) if the edge already existed.
    fn add_edge(&mut self, a: &str, b: &str) -> Result<bool> {
        let ia = self.intern(a);
        let ib = self.intern(b);
        if ia == ib {
            return Err(Error::IdenticalNodes(ia));
        }
        let key = (ia.min(ib), ia.max(ib));
        if self.seen.insert(key, ()).is_some() {
            return Ok(false);
        }
        self.edges.push(key);
        Ok(true)
    }

    fn absorb(&mut self, graph: Graph) {
        debug_assert!(self.labels.is_empty());
        for (i, label) in graph.labels.iter().enumerate() {
            self.ids.insert(label.clone(), i);
        }
        self.labels = graph.labels;
        for &e in &graph.edges {
            self.seen.insert(e, ());
        }
        self.edges = graph.edges;
    }

    fn build(self) -> Graph {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Graph {
            adj,
            edges: self.edges,
            labels: self.labels,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> (Graph, LoadDiagnostics) {
        Graph::parse_edge_list(text.as_bytes(), EdgeListFormat::Whitespace, "<test>").unwrap()
    }

    #[test]
    fn triangle_parses() {
        let (g, diag) = parse("a b\nb c\nc a\n");
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(diag.duplicate_edges, 0);
        assert_eq!(g.label(0), "a");
    }

    #[test]
    fn duplicate_and_reversed_lines_collapse() {
        let (g, diag) = parse("a b\nb a\na b\n");
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(diag.duplicate_edges, 2);
    }

    #[test]
    fn self_loop_is_rejected_with_token() {
        let err = Graph::parse_edge_list("a b\nc c\n".as_bytes(), EdgeListFormat::Whitespace, "<test>")
            .unwrap_err();
        match err {
            Error::SelfLoop { line, token, .. } => {
                assert_eq!(line, 2);
                assert_eq!(token, "c");
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = Graph::parse_edge_list("a b\nxyz\n".as_bytes(), EdgeListFormat::Whitespace, "<test>")
            .unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn csv_format_and_comments() {
        let (g, diag) =
            Graph::parse_edge_list("# header\na,b\nb,c\n".as_bytes(), EdgeListFormat::Csv, "<test>").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(diag.skipped_lines, 1);
    }

    #[test]
    fn degree_examples() {
        let (triangle, _) = parse("1 2\n2 3\n3 1\n");
        assert_eq!(triangle.degree(0).unwrap(), 2);
        let (star, _) = parse("c a\nc b\nc d\nc e\n");
        assert_eq!(star.degree(0).unwrap(), 4);
        assert_eq!(star.degree(1).unwrap(), 1);
        assert!(matches!(star.degree(9), Err(Error::UnknownNode(9))));
    }

    #[test]
    fn common_neighbors_examples() {
        let (triangle, _) = parse("1 2\n2 3\n3 1\n");
        assert_eq!(triangle.common_neighbors(1, 2).unwrap(), 1);
        let (path, _) = parse("a b\nb c\n");
        assert_eq!(path.common_neighbors(0, 2).unwrap(), 1);
        assert_eq!(path.common_neighbors(0, 1).unwrap(), 0);
        assert!(matches!(path.common_neighbors(1, 1), Err(Error::IdenticalNodes(1))));
    }

    #[test]
    fn k_shell_triangle_and_star() {
        let (triangle, _) = parse("1 2\n2 3\n3 1\n");
        let ks = triangle.k_shell_decomposition();
        assert_eq!(ks.core_number, vec![2, 2, 2]);
        let (star, _) = parse("c a\nc b\nc d\nc e\n");
        let ks = star.k_shell_decomposition();
        assert_eq!(ks.core_number, vec![1; 5]);
        assert_eq!(ks.shells.len(), 1);
    }

    #[test]
    fn shells_partition_nodes() {
        let (g, _) = parse("a b\nb c\nc a\nc d\nd e\n");
        let ks = g.k_shell_decomposition();
        let total: usize = ks.shells.values().map(Vec::len).sum();
        assert_eq!(total, g.node_count());
    }

    #[test]
    fn induced_subgraph_examples() {
        let (triangle, _) = parse("a b\nb c\nc a\n");
        let sub = triangle.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(sub.node_count(), 2);
        assert_eq!(sub.edge_count(), 1);
        let all = triangle.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(all.edge_count(), 3);
        let empty = triangle.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.node_count(), 0);
        assert_eq!(empty.edge_count(), 0);
        assert!(triangle.induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let (g, _) = parse("a b\nb c\nc a\nc d\nd e\ne f\nf d\n");
        let sum: usize = (0..g.node_count()).map(|i| g.degree(i).unwrap()).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn round_trip_preserves_labels_and_edges() {
        let (g, _) = parse("a b\nb c\nc a\nc d\n");
        let text = g.to_edge_list();
        let (g2, _) = Graph::parse_edge_list(text.as_bytes(), EdgeListFormat::Whitespace, "<rt>").unwrap();
        assert_eq!(g.node_count(), g2.node_count());
        assert_eq!(g.edge_count(), g2.edge_count());
        let mut l1: Vec<_> = g.labels().to_vec();
        let mut l2: Vec<_> = g2.labels().to_vec();
        l1.sort();
        l2.sort();
        assert_eq!(l1, l2);
        for &(a, b) in g.edges() {
            let a2 = g2.node_by_label(g.label(a)).unwrap();
            let b2 = g2.node_by_label(g.label(b)).unwrap();
            assert!(g2.has_edge(a2, b2));
        }
    }
}
