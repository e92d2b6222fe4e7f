//! graph6 encoding, short form only (`n < 63`).

use super::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(bad("empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(bad(format!("malformed length byte {first:#04x}")));
    }
    if first == 126 {
        return Err(bad("long-form vertex counts are not supported"));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(bad(format!(
            "expected {nbytes} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    if body.len() > nbytes {
        return Err(bad(format!("trailing garbage after {nbytes} data bytes")));
    }
    let mut data = Vec::with_capacity(nbytes * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(bad(format!("data byte {b:#04x} out of range")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            data.push(v >> k & 1 == 1);
        }
    }
    if data[nbits..].iter().any(|&b| b) {
        return Err(bad("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encodes a graph in graph6 without header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6("Bg").unwrap(), Graph::path(3));
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(to_graph6(&Graph::path(3)), "Bg");
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn petersen_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6(" ").is_err());
        assert!(parse_graph6("\x20w").is_err());
        assert!(parse_graph6("~??").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("C").is_err());
        // K3 bits are 111 followed by zero padding; "Bx" sets a padding bit.
        assert!(parse_graph6("Bx").is_err());
        assert!(parse_graph6("a").is_err());
    }
}
