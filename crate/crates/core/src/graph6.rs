//! graph6 encoding: 6-bit packed upper triangle, column-major, bias 63.
//!
//! One graph per line; an optional `>>graph6<<` header is tolerated on parse.
//! `emit(parse(line)) == line` on canonical lines and `parse(emit(g)) == g`
//! label-for-label, which the golden-file tests rely on.

use crate::error::Error;
use crate::graph::Graph;
use crate::N_MAX;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line (header tolerated, surrounding whitespace trimmed).
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let line = text.trim_end_matches(['\n', '\r']).trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(0, "empty line"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::parse(i, format!("byte {b} outside graph6 range 63..=126")));
        }
    }
    let (order, mut pos) = decode_order(bytes)?;
    if order > N_MAX {
        return Err(Error::parse(0, format!("order {order} exceeds N_MAX {N_MAX}")));
    }
    let bits_needed = order * order.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos != bytes_needed {
        return Err(Error::parse(
            bytes.len().min(pos),
            format!(
                "expected {bytes_needed} adjacency bytes for order {order}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut g = Graph::empty(order);
    let mut bit_idx = 0usize;
    let mut current = 0u8;
    let mut have = 0u8;
    for col in 1..order {
        for row in 0..col {
            if have == 0 {
                current = bytes[pos] - BIAS;
                pos += 1;
                have = 6;
            }
            let bit = (current >> (have - 1)) & 1;
            have -= 1;
            bit_idx += 1;
            if bit == 1 {
                g.add_edge(row, col);
            }
        }
    }
    // Padding bits must be zero.
    if have > 0 && current & ((1 << have) - 1) != 0 {
        return Err(Error::parse(bytes.len() - 1, "nonzero padding bits"));
    }
    debug_assert_eq!(bit_idx, bits_needed);
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::parse(1, "truncated 36-bit order"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - BIAS) as usize;
        }
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(Error::parse(0, "truncated 18-bit order"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - BIAS) as usize;
        }
        if n < 63 {
            return Err(Error::parse(1, "non-canonical long order for n < 63"));
        }
        Ok((n, 4))
    }
}

/// Emits the canonical graph6 line (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(BIAS + n as u8);
    } else {
        // N_MAX keeps us well under 2^18.
        out.push(126);
        out.push(BIAS + ((n >> 12) & 63) as u8);
        out.push(BIAS + ((n >> 6) & 63) as u8);
        out.push(BIAS + (n & 63) as u8);
    }
    let mut current = 0u8;
    let mut have = 0u8;
    for col in 1..n {
        for row in 0..col {
            current = (current << 1) | g.has_edge(row, col) as u8;
            have += 1;
            if have == 6 {
                out.push(BIAS + current);
                current = 0;
                have = 0;
            }
        }
    }
    if have > 0 {
        out.push(BIAS + (current << (6 - have)));
    }
    String::from_utf8(out).unwrap()
}
