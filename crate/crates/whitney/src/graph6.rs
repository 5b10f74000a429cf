//! graph6 encoding (McKay), short and extended length forms, no header.
//!
//! A graph6 line is the vertex count followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte
//! (offset 63). The parser is strict: every byte must lie in `63..=126`,
//! the body must have exactly the right length, and padding bits must be
//! zero, so that `write(parse(t)) == t` on canonical input.

use crate::graph::Graph;
use crate::{Error, Result};

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte 0x{b:02x} outside graph6 alphabet")));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated 18-bit length prefix"));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - 63) as u64;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated 36-bit length prefix"));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as u64;
        }
        (n, 8)
    };
    if n > 10_000_000 {
        return Err(err(0, format!("vertex count {n} unreasonably large")));
    }
    let n = n as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(err(bytes.len(), "body shorter than the edge bit count requires"));
    }
    if bytes.len() - pos > nbytes {
        return Err(err(pos + nbytes, "trailing garbage after edge bits"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut cur = 0u8;
    for v in 1..n as u32 {
        for u in 0..v {
            if bit % 6 == 0 {
                cur = bytes[pos] - 63;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = cur & ((1 << (6 - bit % 6)) - 1);
        if pad != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(n, edges))
}

pub fn write(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut nbits = 0;
    for v in 1..n as u32 {
        for u in 0..v {
            cur = cur << 1 | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(cur + 63);
                cur = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((cur << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}
