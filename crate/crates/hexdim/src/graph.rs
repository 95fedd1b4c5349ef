//! Undirected labeled graphs with exact unit-weight distances.
//!
//! Vertices are dense integer ids `0..n`. Labels (`p1:3`, `u2:1`, ...) are an
//! optional bijection kept beside the adjacency structure so that the search
//! engine stays label-agnostic. Distances come from repeated breadth-first
//! traversal and are stored as a full matrix; the graphs this crate targets
//! are small enough (a few hundred vertices) that nothing sparser is worth
//! the complexity.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub type VertexId = usize;

/// The twelve vertex families used by the generated graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Family {
    P1,
    P2,
    Q1,
    Q2,
    R1,
    R2,
    S1,
    S2,
    T1,
    T2,
    U1,
    U2,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::P1,
        Family::P2,
        Family::Q1,
        Family::Q2,
        Family::R1,
        Family::R2,
        Family::S1,
        Family::S2,
        Family::T1,
        Family::T2,
        Family::U1,
        Family::U2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::P1 => "p1",
            Family::P2 => "p2",
            Family::Q1 => "q1",
            Family::Q2 => "q2",
            Family::R1 => "r1",
            Family::R2 => "r2",
            Family::S1 => "s1",
            Family::S2 => "s2",
            Family::T1 => "t1",
            Family::T2 => "t2",
            Family::U1 => "u1",
            Family::U2 => "u2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let lower = s.to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == lower)
            .ok_or_else(|| GraphError::BadLabel(s.to_string()))
    }
}

/// A `(family, index)` vertex label; indices are 1-based as in the
/// construction the generators follow.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexLabel {
    pub family: Family,
    pub index: u32,
}

impl VertexLabel {
    pub fn new(family: Family, index: u32) -> Self {
        VertexLabel { family, index }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.index)
    }
}

impl FromStr for VertexLabel {
    type Err = GraphError;

    /// Parses the `family:index` syntax, e.g. `p1:1`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let (fam, idx) = s
            .split_once(':')
            .ok_or_else(|| GraphError::BadLabel(s.to_string()))?;
        let family = fam.trim().parse()?;
        let index: u32 = idx
            .trim()
            .parse()
            .map_err(|_| GraphError::BadLabel(s.to_string()))?;
        if index == 0 {
            return Err(GraphError::BadLabel(s.to_string()));
        }
        Ok(VertexLabel { family, index })
    }
}

/// An undirected edge in canonical (smaller id first) form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }
}

#[derive(Error, Debug)]
pub enum GraphError {
    #[error("vertex id {0} out of range (graph has {1} vertices)")]
    IdOutOfRange(usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate label assignment: {0}")]
    DuplicateLabel(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("malformed label {0:?} (expected family:index, e.g. p1:1)")]
    BadLabel(String),
    #[error("graph is disconnected: {unreached} of {n} vertices unreachable from vertex 0")]
    Disconnected { unreached: usize, n: usize },
    #[error("edge list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Simple connected undirected graph with an optional vertex-label bijection.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    adj: Vec<Vec<VertexId>>,
    labels: Vec<Option<VertexLabel>>,
    label_ids: HashMap<VertexLabel, VertexId>,
}

impl LabeledGraph {
    /// Builds a graph from an edge list, rejecting loops, duplicate edges,
    /// out-of-range ids and duplicate labels. Connectivity is *not* checked
    /// here; callers that need it (the generators always do) call
    /// [`LabeledGraph::require_connected`].
    pub fn from_edges(
        n: usize,
        edges: &[(VertexId, VertexId)],
        labels: &[(VertexId, VertexLabel)],
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::IdOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::IdOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, neighbors) in adj.iter_mut().enumerate() {
            neighbors.sort_unstable();
            if let Some(w) = neighbors.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }

        let mut label_of = vec![None; n];
        let mut label_ids = HashMap::with_capacity(labels.len());
        for &(v, label) in labels {
            if v >= n {
                return Err(GraphError::IdOutOfRange(v, n));
            }
            if label_of[v].is_some() {
                return Err(GraphError::DuplicateLabel(format!("vertex {v}")));
            }
            if label_ids.insert(label, v).is_some() {
                return Err(GraphError::DuplicateLabel(label.to_string()));
            }
            label_of[v] = Some(label);
        }

        Ok(LabeledGraph {
            adj,
            labels: label_of,
            label_ids,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges in lexicographic (u, v) order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, neighbors) in self.adj.iter().enumerate() {
            for &v in neighbors {
                if u < v {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: VertexId) -> Option<VertexLabel> {
        self.labels.get(v).copied().flatten()
    }

    pub fn vertex_by_label(&self, label: VertexLabel) -> Option<VertexId> {
        self.label_ids.get(&label).copied()
    }

    pub fn require_vertex(&self, label: VertexLabel) -> Result<VertexId, GraphError> {
        self.vertex_by_label(label)
            .ok_or_else(|| GraphError::UnknownLabel(label.to_string()))
    }

    /// Descriptor used in reports: the label when present, the id otherwise.
    pub fn describe_vertex(&self, v: VertexId) -> String {
        match self.label(v) {
            Some(label) => label.to_string(),
            None => v.to_string(),
        }
    }

    pub fn describe_edge(&self, e: Edge) -> String {
        format!(
            "{}-{}",
            self.describe_vertex(e.u()),
            self.describe_vertex(e.v())
        )
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        self.reachable_from(0) == n
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if n == 0 {
            return Ok(());
        }
        let reached = self.reachable_from(0);
        if reached == n {
            Ok(())
        } else {
            Err(GraphError::Disconnected {
                unreached: n - reached,
                n,
            })
        }
    }

    fn reachable_from(&self, start: VertexId) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count
    }

    pub fn degree_histogram(&self) -> HashMap<usize, usize> {
        let mut hist = HashMap::new();
        for v in 0..self.vertex_count() {
            *hist.entry(self.degree(v)).or_insert(0) += 1;
        }
        hist
    }

    /// Serializes to the edge-list text format:
    /// first line `n m`, then one `u v` line per edge, then optional
    /// `# label u FAMILY g` annotation lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.vertex_count(), self.edge_count()));
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.u(), e.v()));
        }
        for v in 0..self.vertex_count() {
            if let Some(label) = self.label(v) {
                out.push_str(&format!(
                    "# label {} {} {}\n",
                    v,
                    label.family.as_str().to_ascii_uppercase(),
                    label.index
                ));
            }
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let mut parts = rest.split_whitespace();
                if parts.next() == Some("label") {
                    let err = |msg: &str| GraphError::Parse {
                        line: line_no,
                        msg: msg.to_string(),
                    };
                    let v: VertexId = parts
                        .next()
                        .ok_or_else(|| err("missing vertex id"))?
                        .parse()
                        .map_err(|_| err("bad vertex id"))?;
                    let family: Family = parts
                        .next()
                        .ok_or_else(|| err("missing family"))?
                        .parse()
                        .map_err(|_| err("bad family"))?;
                    let index: u32 = parts
                        .next()
                        .ok_or_else(|| err("missing index"))?
                        .parse()
                        .map_err(|_| err("bad index"))?;
                    labels.push((v, VertexLabel::new(family, index)));
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let first: usize =
                parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| GraphError::Parse {
                        line: line_no,
                        msg: "expected an integer".to_string(),
                    })?;
            let second: usize =
                parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| GraphError::Parse {
                        line: line_no,
                        msg: "expected two integers".to_string(),
                    })?;
            if header.is_none() {
                header = Some((first, second));
            } else {
                edges.push((first, second));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            msg: "empty edge list".to_string(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        LabeledGraph::from_edges(n, &edges, &labels)
    }

    /// DOT export for visualization.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n  node [shape=circle];\n");
        for v in 0..self.vertex_count() {
            out.push_str(&format!(
                "  {} [label=\"{}\"];\n",
                v,
                self.describe_vertex(v)
            ));
        }
        for e in self.edges() {
            out.push_str(&format!("  {} -- {};\n", e.u(), e.v()));
        }
        out.push_str("}\n");
        out
    }
}

/// Exact all-pairs shortest-path distances in hops.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    max: u32,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest entry (the graph diameter).
    pub fn max_distance(&self) -> u32 {
        self.max
    }

    /// Distance from a vertex to an edge: the smaller of the two endpoint
    /// distances.
    #[inline]
    pub fn vertex_edge(&self, v: VertexId, e: Edge) -> u32 {
        self.get(v, e.u()).min(self.get(v, e.v()))
    }
}

/// Runs one breadth-first traversal per source vertex. Fails on disconnected
/// input (some pair would have no distance).
pub fn all_pairs_distances(g: &LabeledGraph) -> Result<DistanceMatrix, GraphError> {
    g.require_connected()?;
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = VecDeque::new();
    let mut max = 0;
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    max = max.max(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(DistanceMatrix { n, dist, max })
}

/// Free-function form of [`DistanceMatrix::vertex_edge`].
pub fn distance_vertex_edge(dm: &DistanceMatrix, v: VertexId, e: Edge) -> u32 {
    dm.vertex_edge(v, e)
}
