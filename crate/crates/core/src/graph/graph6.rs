//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order, six bits per byte, each byte offset by 63.

use super::{Graph, GraphError};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order representable with the single-byte and four-byte length forms.
pub const MAX_GRAPH6_ORDER: usize = 258_047;

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Parses a single graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, GraphError> {
    let mut bytes = text;
    if let Some(rest) = bytes.strip_prefix(GRAPH6_HEADER.as_bytes()) {
        bytes = rest;
    }
    while let Some((last, rest)) = bytes.split_last() {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(bad(format!(
            "byte {} at offset {pos} outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, payload) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(bad("eight-byte length form is not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated four-byte length"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(bad(format!("non-canonical four-byte length for n={n}")));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(bad(format!(
            "payload has {} bytes, expected {expected} for n={n}",
            payload.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = payload[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` under its current vertex numbering. No header is emitted.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
