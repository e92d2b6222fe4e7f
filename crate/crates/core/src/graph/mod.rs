//! Simple undirected graphs on at most 32 vertices, stored as one neighbor
//! bitmask per vertex.

mod auto;
mod canon;
mod enumerate;
mod graph6;
mod paths;

use std::fmt;

use thiserror::Error;

pub use auto::{is_vertex_transitive, TRANSITIVITY_LIMIT};
pub use canon::{canonical_form, canonical_graph, canonical_labeling, CANON_LIMIT};
pub use enumerate::{enumerate_graphs_up_to_iso, labeled_sweep_class_count, ENUMERATION_LIMIT};
pub use graph6::{parse_graph6, to_graph6};
pub use paths::{enumerate_paths, VertexPath};

pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{{{0}, {1}}} is already an edge")]
    EdgeExists(usize, usize),
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error("invalid edge list: {0}")]
    EdgeList(String),
    #[error("{what} is limited to {limit} vertices, got {n}")]
    OverLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("not a path in the graph: {0:?}")]
    InvalidPath(Vec<usize>),
}

/// Old-to-new vertex index map produced by deletions; `None` for deleted
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap(pub Vec<Option<usize>>);

impl VertexMap {
    pub fn get(&self, old: usize) -> Option<usize> {
        self.0.get(old).copied().flatten()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        VertexMap(self.0.iter().map(|v| v.and_then(|w| next.get(w))).collect())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            g.adj[u] = full_mask(n) & !(1 << u);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(a + b, &edges).unwrap()
    }

    /// Star with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn hypercube(dim: usize) -> Graph {
        let n = 1 << dim;
        let mut edges = Vec::new();
        for u in 0..n {
            for b in 0..dim {
                let v = u ^ (1 << b);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
    pub fn petersen() -> Graph {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ];
        Graph::from_edge_list(10, &edges).unwrap()
    }

    pub(crate) fn from_adjacency(n: usize, adj: [u32; MAX_VERTICES]) -> Graph {
        Graph { n, adj }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask with one bit per vertex.
    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbors_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Distinct vertex pairs that are not edges, `u < v`, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn delete_vertex(&self, u: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(u)?;
        Ok(self.delete_vertices(1 << u))
    }

    /// Deletes every vertex in `mask`, re-indexing survivors densely in their
    /// original order.
    pub fn delete_vertices(&self, mask: u32) -> (Graph, VertexMap) {
        self.induced(self.vertex_mask() & !mask)
    }

    /// Subgraph induced by the vertices in `keep`.
    pub fn induced(&self, keep: u32) -> (Graph, VertexMap) {
        let keep = keep & self.vertex_mask();
        let mut map = vec![None; self.n];
        let mut next = 0;
        for v in bits(keep) {
            map[v] = Some(next);
            next += 1;
        }
        let mut g = Graph::empty(next).unwrap();
        for u in bits(keep) {
            let nu = map[u].unwrap();
            let mut row = 0u32;
            for v in bits(self.adj[u] & keep) {
                row |= 1 << map[v].unwrap();
            }
            g.adj[nu] = row;
        }
        (g, VertexMap(map))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = *self;
        g.clear_edge(u, v);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u, v));
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    /// Vertices of `self` followed by those of `other`, shifted.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Applies `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).unwrap();
        for u in 0..self.n {
            let mut row = 0u32;
            for v in bits(self.adj[u]) {
                row |= 1 << perm[v];
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Components as sorted vertex lists, ordered by minimum vertex.
    /// True for one component; the empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components_within(self.vertex_mask()).len() == 1
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.vertex_mask())
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    /// Components of the subgraph induced by `mask`, as bitmasks ordered by
    /// minimum vertex.
    pub fn components_within(&self, mask: u32) -> Vec<u32> {
        let mut left = mask & self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Text form `"n; u-v, u-v, ..."`.
    pub fn to_edge_list_text(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        format!("{}; {}", self.n, edges.join(", "))
    }

    /// Parses `"n; u-v, u-v, ..."`; the edge part may be empty.
    pub fn parse_edge_list_text(text: &str) -> Result<Graph, GraphError> {
        let bad = |msg: String| GraphError::EdgeList(msg);
        let (n_part, edge_part) = text
            .split_once(';')
            .ok_or_else(|| bad(format!("missing ';' in {text:?}")))?;
        let n: usize = n_part
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad vertex count {:?}", n_part.trim())))?;
        let mut edges = Vec::new();
        for item in edge_part.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| bad(format!("bad edge {item:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad vertex {:?}", s.trim())))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edge_list(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list_text())
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
