use super::{Graph, GraphError};

/// A simple path, as a sequence of distinct vertices with consecutive
/// vertices adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPath {
    vertices: Vec<usize>,
}

impl VertexPath {
    /// Checks the path against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<VertexPath, GraphError> {
        let mut seen = 0u32;
        let valid = !vertices.is_empty()
            && vertices.iter().all(|&v| {
                let fresh = v < g.n() && seen >> v & 1 == 0;
                if v < 32 {
                    seen |= 1 << v;
                }
                fresh
            })
            && vertices.windows(2).all(|w| g.has_edge(w[0], w[1]));
        if valid {
            Ok(VertexPath { vertices })
        } else {
            Err(GraphError::InvalidPath(vertices))
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> u32 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// All simple paths with at most `max_len` vertices. A path and its reverse
/// count once; the orientation with the smaller end vertex first is emitted.
/// Paths come grouped by first vertex, extended depth-first in ascending
/// neighbor order.
pub fn enumerate_paths(g: &Graph, max_len: usize) -> impl Iterator<Item = VertexPath> {
    let mut out = Vec::new();
    if max_len > 0 {
        let mut stack = Vec::with_capacity(max_len);
        for s in 0..g.n() {
            stack.push(s);
            extend(g, max_len, &mut stack, 1 << s, &mut out);
            stack.pop();
        }
    }
    out.into_iter()
}

fn extend(g: &Graph, max_len: usize, stack: &mut Vec<usize>, used: u32, out: &mut Vec<VertexPath>) {
    let last = *stack.last().unwrap();
    if stack.len() == 1 || last > stack[0] {
        out.push(VertexPath {
            vertices: stack.clone(),
        });
    }
    if stack.len() == max_len {
        return;
    }
    for v in super::bits(g.neighbors_mask(last) & !used) {
        stack.push(v);
        extend(g, max_len, stack, used | 1 << v, out);
        stack.pop();
    }
}
