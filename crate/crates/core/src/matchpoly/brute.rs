//! Exhaustive matching enumeration, for cross-checking.

use crate::graph::Graph;

/// Every matching of `g` as an edge list, by backtracking over the edges in
/// order.
pub fn enumerate_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    walk(&edges, 0, 0, &mut chosen, &mut out);
    out
}

fn walk(
    edges: &[(usize, usize)],
    from: usize,
    used: u32,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    out.push(chosen.clone());
    for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
        let m = 1u32 << u | 1u32 << v;
        if used & m == 0 {
            chosen.push((u, v));
            walk(edges, i + 1, used | m, chosen, out);
            chosen.pop();
        }
    }
}

/// Size of a maximum matching, by enumeration.
pub fn matching_number(g: &Graph) -> usize {
    enumerate_matchings(g)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
}

pub fn deficiency(g: &Graph) -> usize {
    g.n() - 2 * matching_number(g)
}

/// Bitmask of the vertices left uncovered by at least one maximum matching.
pub fn missed_by_some_maximum_matching(g: &Graph) -> u32 {
    let all = enumerate_matchings(g);
    let nu = all.iter().map(Vec::len).max().unwrap_or(0);
    let everyone = g.vertex_mask();
    all.iter().filter(|m| m.len() == nu).fold(0, |acc, m| {
        let covered = m.iter().fold(0u32, |c, &(u, v)| c | 1 << u | 1 << v);
        acc | (everyone & !covered)
    })
}

/// Number of matchings of each size.
pub fn count_by_size(g: &Graph) -> Vec<u64> {
    let mut counts = vec![0u64; g.n() / 2 + 1];
    for m in enumerate_matchings(g) {
        counts[m.len()] += 1;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}
