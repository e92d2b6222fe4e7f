use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactpoly::IntPoly;
use crate::graph::{canonical_form, to_graph6, Graph};

/// Graphs up to this size are memoized under their canonical form; larger
/// ones under their labeled graph6 string.
const CANONICAL_KEY_LIMIT: usize = 8;

/// Bounded memo table for recurrence evaluation, shareable across threads.
///
/// Once `capacity` entries are stored, new results are dropped rather than
/// evicting old ones. A lookup only ever returns a value stored for an
/// isomorphic graph.
#[derive(Debug)]
pub struct MemoCache {
    capacity: usize,
    table: Mutex<HashMap<Vec<u8>, IntPoly>>,
}

impl MemoCache {
    pub fn new(capacity: usize) -> Self {
        MemoCache {
            capacity,
            table: Mutex::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn key(g: &Graph) -> Vec<u8> {
        if g.n() <= CANONICAL_KEY_LIMIT {
            canonical_form(g).expect("within canonical limit")
        } else {
            let mut k = to_graph6(g).into_bytes();
            k.push(b'#');
            k
        }
    }

    fn get(&self, key: &[u8]) -> Option<IntPoly> {
        self.table.lock().unwrap().get(key).cloned()
    }

    fn put(&self, key: Vec<u8>, value: IntPoly) {
        let mut t = self.table.lock().unwrap();
        if t.len() < self.capacity {
            t.insert(key, value);
        }
    }
}

impl Default for MemoCache {
    fn default() -> Self {
        MemoCache::new(1 << 16)
    }
}

/// `mu(G) = mu(G - e) - mu(G \ {u, v})` for the first edge `e = {u, v}`, with a
/// fresh per-call memo table.
pub fn mu_by_edge_recurrence(g: &Graph) -> IntPoly {
    mu_by_edge_recurrence_with(g, &MemoCache::default())
}

pub fn mu_by_edge_recurrence_with(g: &Graph, cache: &MemoCache) -> IntPoly {
    let edges = g.edges();
    let Some(&(u, v)) = edges.first() else {
        return IntPoly::monomial(BigInt::one(), g.n());
    };
    let key = MemoCache::key(g);
    if let Some(hit) = cache.get(&key) {
        return hit;
    }
    let without_edge = g.delete_edge(u, v).unwrap();
    let (without_ends, _) = g.delete_vertices(1 << u | 1 << v);
    let result = mu_by_edge_recurrence_with(&without_edge, cache)
        - mu_by_edge_recurrence_with(&without_ends, cache);
    cache.put(key, result.clone());
    result
}

/// `mu(G) = x mu(G \ u) - sum over neighbors v of mu(G \ {u, v})`, expanding
/// at the lowest vertex. Not memoized.
pub fn mu_by_vertex_recurrence(g: &Graph) -> IntPoly {
    if g.n() == 0 {
        return IntPoly::one();
    }
    let u = 0;
    let (rest, _) = g.delete_vertices(1);
    let mut acc = mu_by_vertex_recurrence(&rest).shift(1);
    for v in g.neighbors(u) {
        let (h, _) = g.delete_vertices(1 << u | 1 << v);
        acc = acc - mu_by_vertex_recurrence(&h);
    }
    acc
}
