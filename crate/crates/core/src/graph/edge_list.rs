//! Plain-text edge lists.
//!
//! ```text
//! n 4
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The first non-blank line declares the order; each further non-blank line
//! holds one edge. Repeated edges are collapsed.

use std::fmt::Write as _;

use super::{Graph, ParseError};

fn error(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| error(line, format!("unparseable token {token:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| error(1, "missing \"n <count>\" header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => parse_index(count, header_line)?,
        _ => return Err(error(header_line, "expected \"n <count>\" header")),
    };

    let mut adj = vec![Vec::new(); n];
    for (line, content) in lines {
        let (u, v) = match content.split_whitespace().collect::<Vec<_>>().as_slice() {
            [a, b] => (parse_index(a, line)?, parse_index(b, line)?),
            _ => return Err(error(line, format!("expected \"u v\", found {content:?}"))),
        };
        for vertex in [u, v] {
            if vertex >= n {
                return Err(error(
                    line,
                    format!("vertex {vertex} out of range for n = {n}"),
                ));
            }
        }
        if u == v {
            return Err(error(line, format!("self-loop on vertex {u}")));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(Graph::from_raw_adjacency(adj))
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
