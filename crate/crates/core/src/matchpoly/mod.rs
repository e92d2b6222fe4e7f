//! Matching counts and the matching polynomial.
//!
//! [`match_counts`] runs a vertex-order dynamic program over matched-vertex
//! profiles. The two recurrences in [`recurrence`] compute the same polynomial
//! by edge and by vertex expansion; [`brute`] enumerates matchings outright.
//! Each route is independent of the others so they can serve as mutual
//! oracles.

pub mod brute;
mod recurrence;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::exactpoly::{factor, FactoredPoly, IntPoly};
use crate::graph::{bits, Graph};

pub use recurrence::{
    mu_by_edge_recurrence, mu_by_edge_recurrence_with, mu_by_vertex_recurrence, MemoCache,
};

/// `counts[k]` is the number of matchings with exactly `k` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchCounts {
    counts: Vec<BigUint>,
}

impl MatchCounts {
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Largest `k` with a `k`-edge matching.
    pub fn matching_number(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }
}

/// Exact matching counts by size.
///
/// Vertices are processed in index order. The state is the set of
/// later vertices already matched to an earlier one; each vertex is either
/// skipped, left unmatched, or matched forward to a free later neighbor.
pub fn match_counts(g: &Graph) -> MatchCounts {
    let n = g.n();
    let mut states: HashMap<u32, Vec<BigUint>> = HashMap::new();
    states.insert(0, vec![BigUint::one()]);
    for v in 0..n {
        let bit = 1u32 << v;
        let mut next: HashMap<u32, Vec<BigUint>> = HashMap::with_capacity(states.len() * 2);
        for (state, counts) in states {
            if state & bit != 0 {
                merge(&mut next, state & !bit, &counts, 0);
                continue;
            }
            merge(&mut next, state, &counts, 0);
            let later = g.neighbors_mask(v) & !state & !(bit | (bit - 1));
            for w in bits(later) {
                merge(&mut next, state | 1 << w, &counts, 1);
            }
        }
        states = next;
    }
    let mut counts = states.remove(&0).unwrap_or_else(|| vec![BigUint::one()]);
    while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
        counts.pop();
    }
    MatchCounts { counts }
}

fn merge(into: &mut HashMap<u32, Vec<BigUint>>, state: u32, counts: &[BigUint], shift: usize) {
    let slot = into.entry(state).or_default();
    if slot.len() < counts.len() + shift {
        slot.resize(counts.len() + shift, BigUint::zero());
    }
    for (k, c) in counts.iter().enumerate() {
        slot[k + shift] += c;
    }
}

/// `sum_k (-1)^k p(G,k) x^(n-2k)`, assembled from [`match_counts`].
pub fn matching_polynomial(g: &Graph) -> IntPoly {
    from_counts(g.n(), &match_counts(g))
}

pub(crate) fn from_counts(n: usize, counts: &MatchCounts) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in counts.counts.iter().enumerate() {
        let c = BigInt::from(c.clone());
        coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    IntPoly::new(coeffs)
}

/// Irreducible factorization of the matching polynomial: every root class
/// with its multiplicity.
pub fn root_support(g: &Graph) -> FactoredPoly {
    factor(&matching_polynomial(g)).expect("matching polynomial is monic, never zero")
}

pub fn matching_number(g: &Graph) -> usize {
    match_counts(g).matching_number()
}

/// Number of vertices missed by a maximum matching.
pub fn deficiency(g: &Graph) -> usize {
    g.n() - 2 * matching_number(g)
}
