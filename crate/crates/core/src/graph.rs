//! Simple undirected graphs over dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("malformed vertex set `{0}`: expected {{v,w,...}}")]
    MalformedSet(String),
}

/// A finite simple graph: undirected, loopless, no multi-edges.
///
/// `adj[v]` is the open neighborhood of `v`. Optional display labels ride
/// along for the named fixtures; they do not take part in equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::empty(n); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list; duplicates (in either orientation)
    /// collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Inserts `uv`. Callers inside the crate guarantee `u != v`, both `< n`.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Display name of `v`: its label if present, else its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// `N(A) = {v ∉ A : N(v) ∩ A ≠ ∅}`.
    pub fn set_neighborhood(&self, a: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in a {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(a);
        out
    }

    /// `N[A] = A ∪ N(A)`.
    pub fn closed_neighborhood(&self, a: &VertexSet) -> VertexSet {
        let mut out = a.clone();
        for v in a {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// The subgraph spanned by `x`, plus `map[i]` = original index of new vertex `i`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = x.iter().collect();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let mut sub = Graph::edgeless(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(x).iter() {
                sub.adj[i].insert(position[w]);
            }
        }
        if let Some(labels) = &self.labels {
            sub.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        (sub, map)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let mut g = Graph::edgeless(self.n);
        for v in 0..self.n {
            let mut nb = full.difference(&self.adj[v]);
            nb.remove(v);
            g.adj[v] = nb;
        }
        g.labels = self.labels.clone();
        g
    }

    /// Every pair of distinct vertices adjacent; vacuously true for `n <= 1`.
    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|nb| nb.len() + 1 == self.n)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(self.n);
        let mut queue = VecDeque::from([0]);
        seen.insert(0);
        while let Some(v) = queue.pop_front() {
            for w in &self.adj[v] {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Connected with `n - 1` edges (and at least one vertex).
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Formats a set using vertex labels where available, e.g. `{e,g}`.
    pub fn format_set(&self, s: &VertexSet) -> String {
        let names: Vec<String> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parses `{0,2,5}` or, for labeled graphs, `{e,g}`. Labels take
    /// precedence over numeric indices.
    pub fn parse_set(&self, text: &str) -> Result<VertexSet, GraphError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| GraphError::MalformedSet(t.to_string()))?;
        let mut s = self.empty_set();
        for token in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let by_label = self
                .labels
                .as_ref()
                .and_then(|l| l.iter().position(|name| name == token));
            let v = match by_label {
                Some(v) => v,
                None => token
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v < self.n)
                    .ok_or_else(|| GraphError::UnknownVertex(token.to_string()))?,
            };
            s.insert(v);
        }
        Ok(s)
    }
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn edgeless(n: usize) -> Graph {
    Graph::edgeless(n)
}

/// The path `0 - 1 - ... - (n-1)`; `path(1)` is `K1`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooSmall(n));
    }
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// The star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::edgeless(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}
