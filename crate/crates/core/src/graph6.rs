//! graph6 short form, as used by nauty and friends.
//!
//! Byte 0 is `n + 63`. The upper triangle `x(0,1), x(0,2), x(1,2), x(0,3),
//! ...` follows, packed big-endian into 6-bit groups, each group stored as
//! `group + 63`; the last group is padded with zero bits. Only `n <= 62`
//! is handled, so the long forms starting with `~` are rejected.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

/// Encodes `g` under its own labeling (no canonical relabeling).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + BIAS);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    // every byte is in 63..=126
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Decodes one graph6 string. Surrounding whitespace (e.g. a trailing
/// newline) is ignored, as is an optional `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Graph6("empty input"));
    };
    if first == b'~' {
        return Err(Error::Graph6("long-form header (n > 62) is not supported"));
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(Error::Graph6Byte { position, byte });
        }
    }
    let n = (first - BIAS) as usize;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let bits = n * (n - 1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6Length { expected, found: bytes.len() });
    }

    let body = &bytes[1..];
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::edgeless(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.connect(i, j);
            }
            k += 1;
        }
    }
    for pad in bits..body.len() * 6 {
        if bit(pad) {
            return Err(Error::Graph6("nonzero padding bits"));
        }
    }
    Ok(g)
}
