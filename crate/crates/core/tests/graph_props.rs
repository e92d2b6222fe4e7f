use proptest::prelude::*;

use matchroot::graph::{
    canonical_form, enumerate_graphs_up_to_iso, is_vertex_transitive, parse_graph6, to_graph6,
    Graph,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
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

fn with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_text_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list_text(&g.to_edge_list_text()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_perm(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn deletions_commute(g in graph(10), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        prop_assume!(g.n() >= 2);
        let a = a.index(g.n());
        let b = (a + 1 + b.index(g.n() - 1)) % g.n();
        let mask = 1u32 << a | 1 << b;
        let (both, _) = g.delete_vertices(mask);
        let (ga, ma) = g.delete_vertex(a).unwrap();
        let (gab, _) = ga.delete_vertex(ma.get(b).unwrap()).unwrap();
        let (gb, mb) = g.delete_vertex(b).unwrap();
        let (gba, _) = gb.delete_vertex(mb.get(a).unwrap()).unwrap();
        prop_assert_eq!(both, gab);
        prop_assert_eq!(both, gba);
    }

    #[test]
    fn edge_surgery_inverts(g in graph(10), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        prop_assume!(g.n() >= 2);
        let a = a.index(g.n());
        let b = (a + 1 + b.index(g.n() - 1)) % g.n();
        if g.has_edge(a, b) {
            let h = g.delete_edge(a, b).unwrap();
            prop_assert_eq!(h.edge_count() + 1, g.edge_count());
            prop_assert_eq!(h.add_edge(b, a).unwrap(), g);
        } else {
            let h = g.add_edge(a, b).unwrap();
            prop_assert_eq!(h.delete_edge(a, b).unwrap(), g);
        }
    }

    #[test]
    fn transitivity_is_label_free((g, perm) in with_perm(8)) {
        prop_assert_eq!(
            is_vertex_transitive(&g).unwrap(),
            is_vertex_transitive(&g.relabel(&perm)).unwrap()
        );
    }
}

/// Counts of unlabeled graphs on n vertices, n = 0..=7.
const CLASS_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];

#[test]
fn isomorphism_class_counts() {
    for (n, &want) in CLASS_COUNTS.iter().enumerate() {
        let gs = enumerate_graphs_up_to_iso(n).unwrap();
        assert_eq!(gs.len(), want, "n = {n}");
        let mut forms: Vec<Vec<u8>> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        forms.dedup();
        assert_eq!(forms.len(), want);
    }
}

#[test]
fn edge_count_distribution_on_five_vertices() {
    // classes of 5-vertex graphs by edge count 0..=10
    let want = [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1];
    let mut got = [0; 11];
    for g in enumerate_graphs_up_to_iso(5).unwrap() {
        got[g.edge_count()] += 1;
    }
    assert_eq!(got, want);
}
