//! graph6 codec for graphs on 1..=64 vertices.
//!
//! The format packs the upper triangle of the adjacency matrix in column-major
//! order (columns j = 1..n, rows i = 0..j) into 6-bit groups, each offset by
//! 63 into printable ASCII. Orders up to 62 use a single size byte `n + 63`;
//! 63 and 64 use the long form `~` followed by three 6-bit digits. An optional
//! `>>graph6<<` header is accepted on input and never produced on output.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 alphabet")]
    InvalidByte { position: usize, byte: u8 },
    #[error("graph order {0} is outside the supported range 1..={MAX_VERTICES}")]
    UnsupportedOrder(usize),
    #[error("truncated graph6 string: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after {expected} data bytes")]
    TrailingData { expected: usize },
    #[error("padding bits are not zero")]
    NonzeroPadding,
}

/// Decode a graph6 string. Accepts an optional `>>graph6<<` header and the
/// long two-part size form, rejects orders outside 1..=64, nonzero padding,
/// and trailing bytes.
pub fn parse_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let s = input.strip_prefix(HEADER).unwrap_or(input);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                position: i,
                byte: b,
            });
        }
    }

    let (n, data) = if bytes[0] == 126 {
        // Long form: `~` then three 6-bit digits. `~~` starts the 8-digit form
        // whose smallest value already exceeds the supported range.
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::UnsupportedOrder(MAX_VERTICES + 1));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if data.len() < nbytes {
        return Err(Graph6Error::Truncated {
            expected: nbytes,
            found: data.len(),
        });
    }
    if data.len() > nbytes {
        return Err(Graph6Error::TrailingData { expected: nbytes });
    }

    let bit = |pos: usize| (data[pos / 6] - 63) >> (5 - pos % 6) & 1 == 1;
    let mut g = Graph::new(n).expect("order checked above");
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                g.add_edge(i, j).expect("in-range, no loops");
            }
            pos += 1;
        }
    }
    for pad in nbits..nbytes * 6 {
        if bit(pad) {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Encode a graph on 1..=64 vertices as graph6, without a header.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(
        (1..=MAX_VERTICES).contains(&n),
        "graph6 encoding requires 1..={MAX_VERTICES} vertices, got {n}"
    );
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
