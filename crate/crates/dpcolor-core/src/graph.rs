//! Simple-graph and multigraph data model consumed by every other module.
//!
//! Vertices are dense `0..n` indices. Edges are stored with sorted endpoints
//! and keep their construction order; the edge list order is the canonical
//! index space for signings, so it must be stable across runs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph construction and subgraph operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An endpoint referenced a vertex outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joined a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered pair appeared twice in a simple graph.
    DuplicateEdge { u: usize, v: usize },
    /// An edge index was not in `0..edge_count`.
    BadEdgeIndex { index: usize, edge_count: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::BadEdgeIndex { index, edge_count } => {
                write!(f, "edge index {index} out of range for {edge_count} edges")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected simple graph with stable vertex and edge indexing.
///
/// Immutable after construction; "mutating" operations return a new graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per-vertex list of `(neighbor, edge index)` pairs, in edge order.
    adj: Vec<Vec<(usize, usize)>>,
}

/// Vertex index translations returned by [`SimpleGraph::induced_subgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMaps {
    /// `to_sub[old] = Some(new)` for retained vertices.
    pub to_sub: Vec<Option<usize>>,
    /// `to_super[new] = old`.
    pub to_super: Vec<usize>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Endpoints are stored sorted; the
    /// input order becomes the canonical edge index space.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut seen = BTreeSet::new();
        for &(a, b) in edge_list {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { u: e.0, v: e.1 });
            }
            edges.push(e);
        }
        let mut adj = alloc::vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        Ok(Self { n, edges, adj })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge list in canonical index order, endpoints sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`.
    pub fn endpoints(&self, e: usize) -> Result<(usize, usize), GraphError> {
        self.edges.get(e).copied().ok_or(GraphError::BadEdgeIndex {
            index: e,
            edge_count: self.edges.len(),
        })
    }

    /// `(neighbor, edge index)` pairs incident to `v`, in edge order.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Index of the edge joining `u` and `v`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// New graph with edge `e` removed. Surviving edges keep their relative
    /// order, so the re-derived indices are deterministic.
    pub fn delete_edge(&self, e: usize) -> Result<Self, GraphError> {
        if e >= self.edges.len() {
            return Err(GraphError::BadEdgeIndex {
                index: e,
                edge_count: self.edges.len(),
            });
        }
        let mut edges = self.edges.clone();
        edges.remove(e);
        Self::new(self.n, &edges)
    }

    /// New graph with the edge `(u, v)` added at the end of the index space.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Self::new(self.n, &edges)
    }

    /// Subgraph induced by the vertex set `s` (duplicates ignored), plus the
    /// index translations in both directions. Retained vertices are
    /// renumbered in ascending order of their original index.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Self, VertexMaps), GraphError> {
        let mut keep: Vec<usize> = Vec::new();
        let mut in_set = alloc::vec![false; self.n];
        for &v in s {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if !in_set[v] {
                in_set[v] = true;
                keep.push(v);
            }
        }
        keep.sort_unstable();
        let mut to_sub = alloc::vec![None; self.n];
        for (new, &old) in keep.iter().enumerate() {
            to_sub[old] = Some(new);
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| in_set[u] && in_set[v])
            .map(|&(u, v)| (to_sub[u].unwrap(), to_sub[v].unwrap()))
            .collect();
        let sub = Self::new(keep.len(), &edges)?;
        Ok((
            sub,
            VertexMaps {
                to_sub,
                to_super: keep,
            },
        ))
    }
}

/// Undirected multigraph: parallel edges are permitted and individually
/// indexed, loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            edges.push((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> Result<(usize, usize), GraphError> {
        self.edges.get(e).copied().ok_or(GraphError::BadEdgeIndex {
            index: e,
            edge_count: self.edges.len(),
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }
}

/// Errors from capacity-map construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CapacityError {
    /// Global parameters must satisfy `0 <= i <= j`.
    BadParams { i: i32, j: i32 },
    /// A per-vertex capacity fell outside `-1..=i` (poor) or `-1..=j` (rich).
    OutOfRange {
        vertex: usize,
        value: i32,
        max: i32,
        rich: bool,
    },
}

impl fmt::Display for CapacityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CapacityError::BadParams { i, j } => {
                write!(f, "capacity parameters must satisfy 0 <= i <= j, got ({i}, {j})")
            }
            CapacityError::OutOfRange {
                vertex,
                value,
                max,
                rich,
            } => {
                let slot = if rich { "rich" } else { "poor" };
                write!(
                    f,
                    "{slot} capacity {value} at vertex {vertex} outside -1..={max}"
                )
            }
        }
    }
}

impl core::error::Error for CapacityError {}

/// Per-vertex pair of poor/rich defect budgets together with the global
/// parameters `(i, j)`. A capacity of `-1` forbids that cover vertex
/// entirely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityMap {
    i: i32,
    j: i32,
    caps: Vec<(i32, i32)>,
}

impl CapacityMap {
    pub fn new(i: i32, j: i32, caps: Vec<(i32, i32)>) -> Result<Self, CapacityError> {
        if i < 0 || j < i {
            return Err(CapacityError::BadParams { i, j });
        }
        for (v, &(c1, c2)) in caps.iter().enumerate() {
            if c1 < -1 || c1 > i {
                return Err(CapacityError::OutOfRange {
                    vertex: v,
                    value: c1,
                    max: i,
                    rich: false,
                });
            }
            if c2 < -1 || c2 > j {
                return Err(CapacityError::OutOfRange {
                    vertex: v,
                    value: c2,
                    max: j,
                    rich: true,
                });
            }
        }
        Ok(Self { i, j, caps })
    }

    /// Capacity `(i, j)` at every vertex.
    pub fn uniform(i: i32, j: i32, n: usize) -> Result<Self, CapacityError> {
        Self::new(i, j, alloc::vec![(i, j); n])
    }

    /// Copy with the capacity pair at `v` replaced.
    pub fn with_vertex(&self, v: usize, cap: (i32, i32)) -> Result<Self, CapacityError> {
        let mut caps = self.caps.clone();
        caps[v] = cap;
        Self::new(self.i, self.j, caps)
    }

    /// Global parameters `(i, j)`.
    pub fn params(&self) -> (i32, i32) {
        (self.i, self.j)
    }

    /// Capacity pair `(c1, c2)` of vertex `v`.
    pub fn cap(&self, v: usize) -> (i32, i32) {
        self.caps[v]
    }

    pub fn poor(&self, v: usize) -> i32 {
        self.caps[v].0
    }

    pub fn rich(&self, v: usize) -> i32 {
        self.caps[v].1
    }

    pub fn len(&self) -> usize {
        self.caps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.caps.is_empty()
    }

    pub fn caps(&self) -> &[(i32, i32)] {
        &self.caps
    }
}
