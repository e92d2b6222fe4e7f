//! Automorphism search by backtracking.

use super::{bits, Graph, GraphError};

pub const TRANSITIVITY_LIMIT: usize = 12;

/// True iff every vertex lies in the automorphism orbit of vertex 0.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool, GraphError> {
    let n = g.n();
    if n > TRANSITIVITY_LIMIT {
        return Err(GraphError::OverLimit {
            what: "vertex-transitivity test",
            n,
            limit: TRANSITIVITY_LIMIT,
        });
    }
    if n <= 1 {
        return Ok(true);
    }
    let order = search_order(g);
    let mut orbit = 1u32;
    for target in 1..n {
        if orbit >> target & 1 == 1 {
            continue;
        }
        match automorphism_sending(g, &order, target) {
            Some(sigma) => {
                // Close the orbit under the new automorphism.
                loop {
                    let image = bits(orbit).fold(orbit, |m, v| m | 1 << sigma[v]);
                    if image == orbit {
                        break;
                    }
                    orbit = image;
                }
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Breadth-first order from vertex 0, then from each unreached vertex.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = 0u32;
    for s in 0..g.n() {
        if seen >> s & 1 == 1 {
            continue;
        }
        seen |= 1 << s;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for w in bits(g.neighbors_mask(v) & !seen) {
                seen |= 1 << w;
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

/// An automorphism mapping `order[0] = 0` to `target`, if one exists.
fn automorphism_sending(g: &Graph, order: &[usize], target: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    if g.degree(0) != g.degree(target) {
        return None;
    }
    image[order[0]] = target;
    if extend(g, order, 1, &mut image, 1 << target) {
        Some(image)
    } else {
        None
    }
}

fn extend(g: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u32) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in bits(g.vertex_mask() & !used) {
        if g.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == g.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        if extend(g, order, depth + 1, image, used | 1 << w) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}
