use matchroot::graph::{to_graph6, Graph};

/// Named vertex-transitive fixtures: cycles C3 to C12, complete graphs K2 to
/// K8, K3,3, the 3-cube and the Petersen graph.
pub fn fixture_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("C{n}"), Graph::cycle(n)));
    }
    for n in 2..=8 {
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    out.push(("K3,3".to_string(), Graph::complete_bipartite(3, 3)));
    out.push(("Q3".to_string(), Graph::hypercube(3)));
    out.push(("Petersen".to_string(), Graph::petersen()));
    out
}

/// One graph6 line per fixture.
pub fn cmd_fixtures() -> String {
    fixture_graphs()
        .iter()
        .map(|(_, g)| to_graph6(g) + "\n")
        .collect()
}
