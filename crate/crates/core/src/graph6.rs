//! graph6 encoding for graphs on at most 62 vertices.
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte big-endian, each byte offset by 63. Padding bits are zero.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order expressible with the single-byte size header.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("graph6: only the single-byte size header (n <= 62) is supported")]
    UnsupportedSize,
    #[error("graph6: expected {expected} bytes for n = {n}, found {found}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("graph6: nonzero padding bits in the final byte")]
    NonzeroPadding,
    #[error("graph6: cannot encode a graph on {0} vertices")]
    TooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A trailing `\n` or `\r\n` is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { byte, offset });
        }
    }
    if header == 126 {
        return Err(Graph6Error::UnsupportedSize);
    }
    let n = (header - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength { n, expected, found: body.len() });
    }

    let mut g = Graph::empty(n).expect("n <= 62 always fits");
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6] - 63;
            if byte & (0x20 >> (bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let mask = (1u8 << (6 - bit % 6)) - 1;
        if (body[bit / 6] - 63) & mask != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    if !edges.is_empty() {
        g = Graph::from_edges(n, &edges).expect("indices are in range by construction");
    }
    Ok(g)
}

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            bit += 1;
            if bit.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !bit.is_multiple_of(6) {
        out.push((acc << (6 - bit % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
