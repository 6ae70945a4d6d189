//! Plain-text edge lists.
//!
//! Canonical form: a header line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n` in ascending lexicographic order, LF terminated.
//! [`serialize`] always emits the canonical form. [`parse`] also accepts
//! unordered endpoints, unsorted lines and repeated edges (reported as
//! warnings), but rejects loops and out-of-range endpoints.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub msg: String,
}

pub fn serialize(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + 8 * g.size());
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// Parses an edge list, returning the graph and any non-fatal warnings.
pub fn parse_with_warnings(text: &str) -> Result<(Graph, Vec<ParseWarning>), GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let [n, m] = parse_pair(hline, header, "header")?;

    let mut warnings = Vec::new();
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        let [a, b] = parse_pair(line, text, "edge")?;
        if a >= n || b >= n {
            return Err(GraphError::EdgeOutOfRange { u: a, v: b, n });
        }
        if a == b {
            return Err(GraphError::SelfLoop { v: a });
        }
        if !seen.insert((a.min(b), a.max(b))) {
            warnings.push(ParseWarning {
                line,
                msg: format!("duplicate edge {} {} ignored", a.min(b), a.max(b)),
            });
        }
        edges.push((a, b));
    }
    if edges.len() < m {
        return Err(GraphError::Parse {
            line: hline,
            msg: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(GraphError::Parse {
            line,
            msg: format!("more than the {m} edges promised by the header"),
        });
    }
    Ok((Graph::from_edge_list(n, &edges)?, warnings))
}

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    parse_with_warnings(text).map(|(g, _)| g)
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<[usize; 2], GraphError> {
    let bad = || GraphError::Parse {
        line,
        msg: format!("malformed {what} line {text:?}"),
    };
    let mut it = text.split_ascii_whitespace();
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok([a, b])
}

/// Hex SHA-256 of the canonical serialization.
pub fn graph_hash(g: &Graph) -> String {
    hex_digest(serialize(g).as_bytes())
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in digest.iter() {
        let _ = write!(s, "{b:02x}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_k2() {
        let k2 = Graph::from_edge_list(2, &[(1, 0)]).unwrap();
        assert_eq!(serialize(&k2), "2 1\n0 1\n");
    }

    #[test]
    fn edgeless() {
        assert_eq!(parse("3 0\n").unwrap(), Graph::empty(3));
        assert_eq!(serialize(&Graph::empty(0)), "0 0\n");
    }

    #[test]
    fn rejects() {
        assert!(matches!(
            parse("2 1\n0 2\n"),
            Err(GraphError::EdgeOutOfRange { .. })
        ));
        assert_eq!(parse("3 1\n1 1\n"), Err(GraphError::SelfLoop { v: 1 }));
        assert!(matches!(parse(""), Err(GraphError::Parse { .. })));
        assert!(matches!(parse("3\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse("3 x\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(
            parse("3 1\n0 1\n1 2\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse("3 1\n0 1 2\n"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn lenient_input() {
        let (g, w) = parse_with_warnings("3 3\r\n2 1\n1 0\n0 1\n").unwrap();
        assert_eq!(serialize(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].line, 4);
    }

    #[test]
    fn hash_is_stable() {
        let k2 = parse("2 1\n0 1\n").unwrap();
        assert_eq!(graph_hash(&k2), hex_digest(b"2 1\n0 1\n"));
        assert_eq!(graph_hash(&k2).len(), 64);
    }
}
