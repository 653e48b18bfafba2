//! graph6 encoder/decoder.
//!
//! Bits cover the upper triangle of the adjacency matrix in column order
//! ((0,1), (0,2), (1,2), (0,3), ...), packed big-endian into 6-bit chunks,
//! each offset by 63 into printable ASCII. The order header is one byte for
//! n <= 62, `~` plus 18 bits for n <= 258047, and `~~` plus 36 bits beyond.

use crate::error::{Error, Graph6Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push('~');
        out.push('~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((chunk << (6 - bits)) + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty.into());
    }
    let mut pos = 0;
    let n = decode_order(bytes, &mut pos)?;
    if n as usize > MAX_VERTICES {
        return Err(Graph6Error::OrderTooLarge(n).into());
    }
    let n = n as usize;
    let payload = &bytes[pos..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if payload.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: payload.len(),
        }
        .into());
    }
    let mut values = Vec::with_capacity(payload.len());
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar(b as char).into());
        }
        values.push(b - 63);
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if values[idx / 6] >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    while idx < 6 * values.len() {
        if values[idx / 6] >> (5 - idx % 6) & 1 == 1 {
            return Err(Graph6Error::TrailingBits.into());
        }
        idx += 1;
    }
    Ok(g)
}

fn decode_order(bytes: &[u8], pos: &mut usize) -> Result<u64> {
    let take = |pos: &mut usize| -> std::result::Result<u64, Graph6Error> {
        let b = *bytes.get(*pos).ok_or(Graph6Error::MalformedHeader)?;
        *pos += 1;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar(b as char));
        }
        Ok((b - 63) as u64)
    };
    let first = take(pos).map_err(Error::Graph6)?;
    if first != 63 {
        return Ok(first);
    }
    let second = take(pos).map_err(Error::Graph6)?;
    if second != 63 {
        let mut n = second;
        for _ in 0..2 {
            n = n << 6 | take(pos).map_err(Error::Graph6)?;
        }
        Ok(n)
    } else {
        let mut n = 0;
        for _ in 0..6 {
            n = n << 6 | take(pos).map_err(Error::Graph6)?;
        }
        Ok(n)
    }
}
