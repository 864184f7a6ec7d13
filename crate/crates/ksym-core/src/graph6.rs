//! graph6 interchange format, bit-exact per the published specification.
//!
//! The order is encoded as `n+63` for `n <= 62` and as `126` followed by three
//! 6-bit bytes for larger orders (the 8-byte form for n > 258047 is rejected
//! since graphs here are capped at 64 vertices). The payload packs the upper
//! triangle column by column, pair (i,j) ordered by (j,i), six bits per byte,
//! each byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#x} at position {pos} (expected 63..=126)")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated graph6 header")]
    TruncatedHeader,
    #[error("graph6 payload has {got} bytes, expected {expected} for order {n}")]
    PayloadLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("graph6 order {n} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { n: usize },
    #[error("inconsistent adjacency: {0}")]
    Graph(#[from] GraphError),
}

/// Encodes a graph as a single graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 line. Leading/trailing whitespace and the optional
/// `>>graph6<<` prefix are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let mut s = line.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    let (n, payload) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte order form: always beyond our 64-vertex cap
            if bytes.len() < 8 {
                return Err(Graph6Error::TruncatedHeader);
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | (b - 63) as usize;
            }
            return Err(Graph6Error::OrderTooLarge { n });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { n });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if payload.len() != expected {
        return Err(Graph6Error::PayloadLength {
            n,
            expected,
            got: payload.len(),
        });
    }
    let mut rows = vec![0u64; n];
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = (payload[pos / 6] - 63) as u64;
            if byte >> (5 - pos % 6) & 1 != 0 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            pos += 1;
        }
    }
    Ok(Graph::from_rows(rows)?)
}
