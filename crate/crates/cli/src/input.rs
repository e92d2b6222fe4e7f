use matchroot::exactpoly::{IntPoly, RootClass};
use matchroot::graph::{parse_graph6, Graph};
use matchroot::matchpoly::root_support;

use crate::CliError;

/// Edge-list text (`"4; 0-1, 0-2"`) when the input contains `;`, graph6
/// otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    if text.contains(';') {
        Ok(Graph::parse_edge_list_text(text)?)
    } else {
        Ok(parse_graph6(text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSelector {
    All,
    /// Position in the sorted factor list of the matching polynomial, from 0.
    Index(usize),
    Poly(IntPoly),
}

impl std::str::FromStr for RootSelector {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "all" {
            Ok(RootSelector::All)
        } else if let Some(k) = s.strip_prefix('#') {
            k.parse()
                .map(RootSelector::Index)
                .map_err(|_| CliError::Usage(format!("bad root index `{k}`")))
        } else if let Some(c) = s.strip_prefix("poly:") {
            Ok(RootSelector::Poly(IntPoly::parse_coeff_list(c)?))
        } else {
            Err(CliError::Usage(format!(
                "root selector must be `all`, `#k` or `poly:c0,c1,...`, got `{s}`"
            )))
        }
    }
}

impl RootSelector {
    /// Resolves against `g`. Explicit polynomials must be irreducible but need
    /// not divide the matching polynomial.
    pub fn resolve(&self, g: &Graph) -> Result<Vec<RootClass>, CliError> {
        let support: Vec<RootClass> = root_support(g)
            .factors
            .into_iter()
            .map(|(r, _)| r)
            .collect();
        match self {
            RootSelector::All => Ok(support),
            RootSelector::Index(k) => support.get(*k).cloned().map(|r| vec![r]).ok_or_else(|| {
                CliError::Usage(format!(
                    "root index {k} out of range: the matching polynomial has {} distinct factors",
                    support.len()
                ))
            }),
            RootSelector::Poly(p) => Ok(vec![RootClass::new(p.clone())?]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_forms() {
        assert_eq!(parse_graph("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph("3; 0-1, 1-2, 0-2").unwrap(), Graph::complete(3));
        assert!(parse_graph("3; 0-3").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn selectors() {
        let star = Graph::star(3);
        let all = "all"
            .parse::<RootSelector>()
            .unwrap()
            .resolve(&star)
            .unwrap();
        assert_eq!(all.len(), 2);
        let first = "#0"
            .parse::<RootSelector>()
            .unwrap()
            .resolve(&star)
            .unwrap();
        assert!(first[0].is_zero_root());
        assert!("#2"
            .parse::<RootSelector>()
            .unwrap()
            .resolve(&star)
            .is_err());
        let q = "poly:-3,0,1"
            .parse::<RootSelector>()
            .unwrap()
            .resolve(&star)
            .unwrap();
        assert_eq!(q[0].minpoly(), &IntPoly::from_i64s(&[-3, 0, 1]));
        let reducible = "poly:-1,0,1".parse::<RootSelector>().unwrap();
        assert!(reducible.resolve(&star).is_err());
        assert!("nine".parse::<RootSelector>().is_err());
        assert!("#x".parse::<RootSelector>().is_err());
    }
}
