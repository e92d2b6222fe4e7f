use std::fmt::Write;

use matchroot::exactpoly::factor;
use matchroot::graph::Graph;
use matchroot::matchpoly::{deficiency, matching_number, matching_polynomial};
use matchroot::structure::{classify_all, decomposition, SignTable, VertexSign};

use crate::input::RootSelector;
use crate::CliError;

fn list(vs: &[usize]) -> String {
    if vs.is_empty() {
        "-".to_string()
    } else {
        vs.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Matching polynomial with its factorization, matching number and
/// deficiency, one item per line.
pub fn cmd_poly(g: &Graph) -> Result<String, CliError> {
    let mu = matching_polynomial(g);
    let expanded = mu.to_string();
    let factored = factor(&mu)?.to_string();
    let mut out = if factored == expanded {
        expanded
    } else {
        format!("{expanded} = {factored}")
    };
    out.push('\n');
    writeln!(out, "matching number: {}", matching_number(g)).unwrap();
    writeln!(out, "deficiency: {}", deficiency(g)).unwrap();
    Ok(out)
}

pub fn sign_tables(g: &Graph, roots: &RootSelector) -> Result<Vec<SignTable>, CliError> {
    roots
        .resolve(g)?
        .iter()
        .map(|r| classify_all(g, r).map_err(CliError::from))
        .collect()
}

pub fn cmd_classify(g: &Graph, roots: &RootSelector) -> Result<String, CliError> {
    let mut out = String::new();
    for t in sign_tables(g, roots)? {
        writeln!(out, "root {} (multiplicity {})", t.root, t.base_mult).unwrap();
        for (v, s) in t.signs.iter().enumerate() {
            let name = match s {
                VertexSign::Essential => "essential",
                VertexSign::Neutral => "neutral",
                VertexSign::Positive => "positive",
            };
            let special = if t.is_special(v) { " special" } else { "" };
            writeln!(out, "  {v} {name}{special}").unwrap();
        }
        writeln!(out, "  special: {}", list(&t.special)).unwrap();
    }
    Ok(out)
}

/// Returns the listing and whether every checked count identity held.
pub fn cmd_decompose(g: &Graph, roots: &RootSelector) -> Result<(String, bool), CliError> {
    let mut out = String::new();
    let mut all_ok = true;
    for root in roots.resolve(g)? {
        let d = decomposition(g, &root)?;
        let mult = matchroot::exactpoly::multiplicity(&root, &matching_polynomial(g))?;
        writeln!(out, "root {root} (multiplicity {mult})").unwrap();
        writeln!(out, "  D: {}", list(&d.d)).unwrap();
        writeln!(out, "  A: {}", list(&d.a)).unwrap();
        writeln!(out, "  C: {}", list(&d.c)).unwrap();
        if mult == 0 {
            writeln!(out, "  root absent, count identity skipped").unwrap();
            continue;
        }
        let c = d.d_components(g) as i64;
        let a = d.a.len() as i64;
        let ok = c - a == mult as i64;
        all_ok &= ok;
        writeln!(
            out,
            "  c(D) - |A| = {c} - {a} = {} {}",
            c - a,
            if ok { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    Ok((out, all_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_graph;

    #[test]
    fn poly_lines() {
        let first = |g: &Graph| cmd_poly(g).unwrap().lines().next().unwrap().to_string();
        assert_eq!(first(&Graph::star(3)), "x^4 - 3x^2 = x^2 (x^2 - 3)");
        assert!(first(&parse_graph("Bw").unwrap()).starts_with("x^3 - 3x"));
        assert_eq!(first(&Graph::empty(2).unwrap()), "x^2");
        let text = cmd_poly(&Graph::star(3)).unwrap();
        assert!(text.contains("matching number: 1\n"));
        assert!(text.contains("deficiency: 2\n"));
    }

    #[test]
    fn classify_star() {
        let text = cmd_classify(&Graph::star(3), &"#0".parse().unwrap()).unwrap();
        assert_eq!(
            text,
            "root x (multiplicity 2)\n  0 positive special\n  1 essential\n  2 essential\n  3 essential\n  special: 0\n"
        );
        let text = cmd_classify(&Graph::star(3), &"poly:-3,0,1".parse().unwrap()).unwrap();
        assert_eq!(text.matches("essential").count(), 4);
    }

    #[test]
    fn decompose_examples() {
        let (text, ok) = cmd_decompose(&Graph::star(3), &"#0".parse().unwrap()).unwrap();
        assert!(ok);
        assert!(text.contains("  D: 1 2 3\n  A: 0\n  C: -\n  c(D) - |A| = 3 - 1 = 2 ok\n"));
        let (text, ok) =
            cmd_decompose(&Graph::cycle(5), &"poly:5,0,-5,0,1".parse().unwrap()).unwrap();
        assert!(ok);
        assert!(text.contains("  D: 0 1 2 3 4\n  A: -\n  C: -\n  c(D) - |A| = 1 - 0 = 1 ok\n"));
        let (text, ok) = cmd_decompose(&Graph::path(4), &"poly:0,1".parse().unwrap()).unwrap();
        assert!(ok);
        assert!(text.contains("  D: -\n"));
        assert!(text.contains("skipped"));
    }
}
