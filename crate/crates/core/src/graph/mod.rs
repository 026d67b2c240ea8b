//! Undirected simple graphs with vertex ids `0..n`.
//!
//! Everything else in the crate is built on [`Graph`]: it is immutable once
//! constructed, neighbor lists are kept sorted, and the edge set is symmetric
//! and loop-free by construction.

mod distance;
mod generators;
mod interval;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use distance::{
    ball, distances_from, eccentricity, longest_shortest_path, radical_center, UNREACHABLE,
};
pub use generators::{
    build_grid, build_path, build_path_forest, build_permutation_graph, build_random_graph,
    grid_vertex,
};
pub use interval::{build_interval_graph, Interval, IntervalRepresentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed interval for vertex {id}: [{left}, {right}]")]
    MalformedInterval { id: usize, left: i64, right: i64 },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("sequence is not a path in the host graph: {0}")]
    NotAPath(String),
}

/// Immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "EdgeListData", try_from = "EdgeListData")]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeListData {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListData {
    fn from(g: Graph) -> Self {
        EdgeListData {
            n: g.vertex_count(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<EdgeListData> for Graph {
    type Error = GraphError;

    fn try_from(data: EdgeListData) -> Result<Self, Self::Error> {
        Graph::from_edges(data.n, data.edges)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Loops, repeated edges (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.vertex_count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// Copy of the graph where vertex `v` becomes `mapping[v]`.
    pub fn relabel(&self, mapping: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if mapping.len() != n {
            return Err(GraphError::InvalidSize(format!(
                "relabeling has {} entries for {} vertices",
                mapping.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &m in mapping {
            if m >= n || std::mem::replace(&mut seen[m], true) {
                return Err(GraphError::NotAPermutation(n));
            }
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (mapping[u], mapping[v])))
    }

    /// Same graph plus `extra` isolated vertices with ids `n..n+extra`.
    pub fn with_isolated_vertices(&self, extra: usize) -> Graph {
        let mut adjacency = self.adjacency.clone();
        adjacency.resize(self.vertex_count() + extra, Vec::new());
        Graph {
            adjacency,
            edge_count: self.edge_count,
        }
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if index[v] != usize::MAX {
                return Err(GraphError::InvalidSize(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.neighbors(v).iter().filter_map(move |&w| {
                (index[w] != usize::MAX && i < index[w]).then_some((i, index[w]))
            })
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }
}

/// Subset of the vertex ids `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            members: vec![false; universe],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            members: vec![true; universe],
            len: universe,
        }
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = VertexSet::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.members.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    /// Returns `true` if `v` was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        if self.members[v] {
            false
        } else {
            self.members[v] = true;
            self.len += 1;
            true
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.then_some(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for v in other.iter() {
            self.insert(v);
        }
    }
}

/// A vertex sequence forming a simple path in some host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecoration {
    vertices: Vec<usize>,
}

impl PathDecoration {
    pub fn new(host: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NotAPath("empty sequence".into()));
        }
        let mut seen = VertexSet::new(host.vertex_count());
        for &v in &vertices {
            if !host.contains_vertex(v) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: host.vertex_count(),
                });
            }
            if !seen.insert(v) {
                return Err(GraphError::NotAPath(format!("vertex {v} repeated")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !host.has_edge(w[0], w[1])) {
            return Err(GraphError::NotAPath(format!(
                "{} and {} not adjacent",
                w[0], w[1]
            )));
        }
        Ok(PathDecoration { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices on the path.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }
}
