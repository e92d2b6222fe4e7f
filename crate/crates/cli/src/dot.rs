use std::fmt::Write;

use matchroot::graph::Graph;
use matchroot::structure::{SignTable, VertexSign};

const ESSENTIAL: &str = "#e41a1c";
const NEUTRAL: &str = "#bdbdbd";
const POSITIVE: &str = "#377eb8";
const SPECIAL: &str = "#ff7f00";

/// Undirected DOT graph with one filled node per vertex. Special vertices
/// get their own color; everything else is colored by sign.
pub fn to_dot(g: &Graph, table: &SignTable, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  label=\"root {}\";", table.root).unwrap();
    writeln!(out, "  node [style=filled];").unwrap();
    for (v, s) in table.signs.iter().enumerate() {
        let color = if table.is_special(v) {
            SPECIAL
        } else {
            match s {
                VertexSign::Essential => ESSENTIAL,
                VertexSign::Neutral => NEUTRAL,
                VertexSign::Positive => POSITIVE,
            }
        };
        writeln!(out, "  {v} [fillcolor=\"{color}\"];").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
