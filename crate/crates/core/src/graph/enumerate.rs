//! Isomorphism-class enumeration by labeled sweep plus canonical dedup.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, parse_graph6, Graph, GraphError, MAX_VERTICES};

pub const ENUMERATION_LIMIT: usize = 7;

/// One representative (the canonical graph) per isomorphism class of graphs
/// on exactly `n` vertices, sorted by canonical form.
///
/// Every class has a labeling with non-increasing degrees along the vertex
/// order, so only those labeled graphs are canonized.
pub fn enumerate_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>, GraphError> {
    let forms = sweep(n, true)?;
    Ok(forms
        .iter()
        .map(|f| parse_graph6(std::str::from_utf8(f).unwrap()).unwrap())
        .collect())
}

/// Number of classes found by canonizing every one of the `2^(n(n-1)/2)`
/// labeled graphs, with no degree filter. Used to cross-check
/// [`enumerate_graphs_up_to_iso`].
pub fn labeled_sweep_class_count(n: usize) -> Result<usize, GraphError> {
    Ok(sweep(n, false)?.len())
}

fn sweep(n: usize, degree_filter: bool) -> Result<BTreeSet<Vec<u8>>, GraphError> {
    if n > ENUMERATION_LIMIT {
        return Err(GraphError::OverLimit {
            what: "isomorphism-class enumeration",
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    let forms = (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, code| {
            let mut adj = [0u32; MAX_VERTICES];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if code >> k & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
            if degree_filter
                && adj[..n]
                    .windows(2)
                    .any(|w| w[0].count_ones() < w[1].count_ones())
            {
                return acc;
            }
            let g = Graph::from_adjacency(n, adj);
            acc.insert(canonical_form(&g).unwrap());
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(forms)
}
