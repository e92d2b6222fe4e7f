//! Brute-force canonical labeling.
//!
//! The canonical form is the lexicographically largest upper-triangle bit
//! string (column order, as in graph6) over all vertex orderings whose degree
//! sequence is non-increasing. Restricting to degree-sorted orderings keeps the
//! result an isomorphism invariant. Branches are cut when their prefix is
//! already smaller than the best string found, and interchangeable twin
//! vertices are tried once per search node.

use std::cmp::Ordering;

use super::{bits, to_graph6, Graph, GraphError};

/// Largest vertex count accepted by the brute-force search.
pub const CANON_LIMIT: usize = 10;

/// Canonical byte string: the graph6 encoding of [`canonical_graph`].
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    Ok(to_graph6(&canonical_graph(g)?).into_bytes())
}

pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    let perm = canonical_labeling(g)?;
    Ok(g.relabel(&perm))
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    if n > CANON_LIMIT {
        return Err(GraphError::OverLimit {
            what: "canonical form",
            n,
            limit: CANON_LIMIT,
        });
    }
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let twin_rep: Vec<usize> = (0..n)
        .map(|v| (0..=v).find(|&u| is_twin(g, u, v)).unwrap())
        .collect();
    let mut search = Search {
        g,
        degrees,
        twin_rep,
        order: Vec::with_capacity(n),
        chunks: Vec::with_capacity(n),
        best_chunks: Vec::new(),
        best_order: Vec::new(),
    };
    search.descend(0);
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

fn is_twin(g: &Graph, u: usize, v: usize) -> bool {
    u == v || g.neighbors_mask(u) & !(1 << v) == g.neighbors_mask(v) & !(1 << u)
}

struct Search<'a> {
    g: &'a Graph,
    degrees: Vec<usize>,
    twin_rep: Vec<usize>,
    order: Vec<usize>,
    chunks: Vec<u32>,
    best_chunks: Vec<u32>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, used: u32) {
        let pos = self.order.len();
        let n = self.g.n();
        if pos == n {
            if self.best_order.is_empty() || self.chunks > self.best_chunks {
                self.best_chunks.clone_from(&self.chunks);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let mut tried_reps = 0u32;
        for v in bits(self.g.vertex_mask() & !used) {
            if self.g.degree(v) != self.degrees[pos] {
                continue;
            }
            let rep = self.twin_rep[v];
            if tried_reps >> rep & 1 == 1 {
                continue;
            }
            tried_reps |= 1 << rep;
            let mut chunk = 0u32;
            for &w in &self.order {
                chunk = chunk << 1 | self.g.has_edge(w, v) as u32;
            }
            if !self.best_order.is_empty() {
                let prefix = &self.best_chunks[..pos];
                let ord = self.chunks[..]
                    .cmp(prefix)
                    .then(chunk.cmp(&self.best_chunks[pos]));
                if ord == Ordering::Less {
                    continue;
                }
            }
            self.order.push(v);
            self.chunks.push(chunk);
            self.descend(used | 1 << v);
            self.order.pop();
            self.chunks.pop();
        }
    }
}
