//! The graph6 short form.
//!
//! Layout: a size header followed by the upper triangle of the adjacency
//! matrix, read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! six bits per byte, most significant bit first, each byte offset by 63.

use super::{Graph, ParseError};

/// Largest order accepted by [`parse_graph6`].
pub const MAX_GRAPH6_ORDER: usize = 1 << 18;

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126;

fn push_size(out: &mut Vec<u8>, n: usize) {
    let groups = if n <= 62 {
        out.push(n as u8 + BIAS);
        return;
    } else if n <= 258_047 {
        out.push(LONG_HEADER);
        3
    } else {
        out.push(LONG_HEADER);
        out.push(LONG_HEADER);
        6
    };
    for g in (0..groups).rev() {
        out.push(((n >> (6 * g)) & 0x3f) as u8 + BIAS);
    }
}

/// Encodes the labeled graph; the output is not isomorphism-canonical.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + pairs.div_ceil(6));
    push_size(&mut out, n);

    let mut bits = vec![0u8; pairs.div_ceil(6)];
    for (u, v) in g.edges() {
        // u < v; column v starts after v(v-1)/2 earlier pairs
        let index = v * (v - 1) / 2 + u;
        bits[index / 6] |= 1 << (5 - index % 6);
    }
    out.extend(bits.into_iter().map(|b| b + BIAS));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn read_groups(bytes: &[u8], start: usize, count: usize) -> Result<usize, ParseError> {
    if bytes.len() < start + count {
        return Err(ParseError::Graph6Header {
            offset: bytes.len(),
            reason: "size header is truncated",
        });
    }
    Ok(bytes[start..start + count]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS)))
}

/// Decodes one graph6 string. A single trailing line terminator is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text
        .strip_suffix('\n')
        .map(|t| t.strip_suffix('\r').unwrap_or(t))
        .unwrap_or(text)
        .as_bytes();

    if let Some(offset) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(ParseError::Graph6Byte {
            offset,
            byte: bytes[offset],
        });
    }
    let (n, header_len) = match bytes {
        [] => {
            return Err(ParseError::Graph6Header {
                offset: 0,
                reason: "input is empty",
            })
        }
        [LONG_HEADER, LONG_HEADER, ..] => (read_groups(bytes, 2, 6)?, 8),
        [LONG_HEADER, ..] => (read_groups(bytes, 1, 3)?, 4),
        [first, ..] => (usize::from(first - BIAS), 1),
    };
    if n > MAX_GRAPH6_ORDER {
        return Err(ParseError::Graph6Header {
            offset: 0,
            reason: "order exceeds 2^18",
        });
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let body = &bytes[header_len..];
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::Graph6Length {
            offset: header_len,
            expected,
            found: body.len(),
        });
    }
    if pairs % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        let pad_mask = (1u8 << (6 - pairs % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(ParseError::Graph6Padding {
                offset: header_len + expected - 1,
            });
        }
    }

    let mut adj = vec![Vec::new(); n];
    let mut index = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[index / 6] - BIAS;
            if byte & (1 << (5 - index % 6)) != 0 {
                adj[u].push(v);
                adj[v].push(u);
            }
            index += 1;
        }
    }
    Ok(Graph::from_raw_adjacency(adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_small_graphs() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(parse_graph6("C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn encodes_small_graphs() {
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::complete(2)), "A_");
        assert_eq!(encode_graph6(&Graph::empty(4)), "C?");
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        // five-vertex example from the format description: edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn long_headers_round_trip() {
        for n in [62, 63, 100, 258_047, 258_048] {
            let mut out = Vec::new();
            push_size(&mut out, n);
            let expected_len = match n {
                0..=62 => 1,
                63..=258_047 => 4,
                _ => 8,
            };
            assert_eq!(out.len(), expected_len, "n = {n}");
        }
        let g = Graph::cycle(70);
        let text = encode_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn reports_errors_with_offsets() {
        assert_eq!(
            parse_graph6("C~ "),
            Err(ParseError::Graph6Byte {
                offset: 2,
                byte: b' '
            })
        );
        assert!(matches!(
            parse_graph6(""),
            Err(ParseError::Graph6Header { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("~??"),
            Err(ParseError::Graph6Header { .. })
        ));
        assert_eq!(
            parse_graph6("C~~"),
            Err(ParseError::Graph6Length {
                offset: 1,
                expected: 1,
                found: 2
            })
        );
        // K2 has one pair; the remaining five bits of its byte must be clear
        assert_eq!(
            parse_graph6("A`"),
            Err(ParseError::Graph6Padding { offset: 1 })
        );
        let too_big = format!("~~{}", "~".repeat(6));
        assert!(matches!(
            parse_graph6(&too_big),
            Err(ParseError::Graph6Header {
                reason: "order exceeds 2^18",
                ..
            })
        ));
    }
}
