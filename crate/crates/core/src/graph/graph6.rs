//! graph6 codec restricted to the single-byte order encoding (`n <= 62`).
//!
//! Layout: one order byte `63 + n`, then the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ..`, packed
//! big-endian into 6-bit groups, each group offset by 63, the last group
//! zero-padded.

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

pub const MAX_GRAPH6_ORDER: usize = 62;
pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";

pub fn to_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_GRAPH6_ORDER });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(out)
}

/// Parses one graph6 string. A leading `>>graph6<<` header is stripped.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let (&order, payload) = text.split_first().ok_or(Error::EmptyInput)?;
    if !(63..=126).contains(&order) {
        return Err(Error::MalformedByte { offset: 0, byte: order });
    }
    if order == 126 {
        // 126 introduces the multi-byte order forms, which all mean n >= 63.
        return Err(Error::OrderTooLarge { n: 63, max: MAX_GRAPH6_ORDER });
    }
    let n = (order - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if let Some((i, &b)) = payload.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Error::MalformedByte { offset: i + 1, byte: b });
    }
    if payload.len() < expected {
        return Err(Error::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Error::TrailingBytes { extra: payload.len() - expected });
    }
    let bit = |k: usize| ((payload[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::NonzeroPadding);
    }
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                b.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Parses a line from a graph6 stream, ignoring surrounding ASCII whitespace.
/// Returns `None` for blank lines and bare header lines.
pub fn parse_graph6_line(line: &str) -> Option<Result<Graph>> {
    let t = line.trim();
    if t.is_empty() || t.as_bytes() == GRAPH6_HEADER {
        return None;
    }
    Some(parse_graph6(t.as_bytes()))
}
