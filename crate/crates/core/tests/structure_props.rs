use proptest::prelude::*;

use matchroot::exactpoly::{factor, RootClass};
use matchroot::graph::{enumerate_paths, Graph};
use matchroot::matchpoly::{brute, matching_polynomial, root_support};
use matchroot::structure::{
    classify_all, decomposition, is_essential_path, LemmaId, Verdict, Verifier, VerifyConfig,
    VertexSign,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Multiplicity read off a fresh factorization of the deleted subgraph.
fn mult_after(g: &Graph, root: &RootClass, deleted: u32) -> u32 {
    let (h, _) = g.delete_vertices(deleted);
    factor(&matching_polynomial(&h)).unwrap().exponent_of(root)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn signs_match_refactored_subgraphs(g in graph(8)) {
        for (root, base) in root_support(&g).factors {
            let t = classify_all(&g, &root).unwrap();
            prop_assert_eq!(t.base_mult, base);
            for (v, s) in t.signs.iter().enumerate() {
                let delta = mult_after(&g, &root, 1 << v) as i64 - base as i64;
                let want = match delta {
                    -1 => VertexSign::Essential,
                    0 => VertexSign::Neutral,
                    1 => VertexSign::Positive,
                    _ => panic!("interlacing broken at {v}"),
                };
                prop_assert_eq!(*s, want);
            }
        }
    }

    #[test]
    fn special_vertices_are_positive(g in graph(8)) {
        for (root, _) in root_support(&g).factors {
            let t = classify_all(&g, &root).unwrap();
            for &u in &t.special {
                prop_assert_eq!(t.signs[u], VertexSign::Positive);
                prop_assert!(g.neighbors(u).any(|v| t.signs[v] == VertexSign::Essential));
            }
        }
    }

    #[test]
    fn decomposition_partitions(g in graph(8)) {
        for (root, _) in root_support(&g).factors {
            let d = decomposition(&g, &root).unwrap();
            let mut all: Vec<usize> = d.d.iter().chain(&d.a).chain(&d.c).copied().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn zero_root_signs_follow_maximum_matchings(g in graph(9)) {
        let x = RootClass::zero_root();
        let t = classify_all(&g, &x).unwrap();
        let missed = brute::missed_by_some_maximum_matching(&g);
        for (v, s) in t.signs.iter().enumerate() {
            prop_assert_eq!(*s == VertexSign::Essential, missed >> v & 1 == 1);
            prop_assert_ne!(*s, VertexSign::Neutral);
        }
    }

    #[test]
    fn essential_paths_match_refactoring(g in graph(7)) {
        for (root, base) in root_support(&g).factors {
            for p in enumerate_paths(&g, 4) {
                let want = mult_after(&g, &root, p.mask()) + 1 == base;
                prop_assert_eq!(is_essential_path(&g, &root, &p).unwrap(), want);
            }
        }
    }

    #[test]
    fn every_lemma_holds_on_eight_vertices(g in graph(8)) {
        for (root, _) in root_support(&g).factors {
            let v = Verifier::new(&g, &root, VerifyConfig::default());
            for r in v.run_all(&LemmaId::ALL) {
                prop_assert_ne!(r.verdict, Verdict::Violated, "{}", r.to_json());
            }
        }
    }
}

#[test]
fn star_leaf_center_leaf_is_essential() {
    let g = Graph::star(3);
    let x = RootClass::zero_root();
    // brute force: deleting 1, 0, 2 leaves one isolated vertex
    assert_eq!(mult_after(&g, &x, 0b0111), 1);
    assert_eq!(mult_after(&g, &x, 0), 2);
    let p = matchroot::graph::VertexPath::new(&g, vec![1, 0, 2]).unwrap();
    assert!(is_essential_path(&g, &x, &p).unwrap());
}
