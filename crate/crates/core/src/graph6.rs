//! graph6 interchange, bit-compatible with nauty's `showg`/`geng` output.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed into 6-bit
//! groups, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

/// Encodes `g` as a single graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<usize> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(usize::from(b - OFFSET)),
        Some(&b) => Err(parse_err(at, format!("byte 0x{b:02x} outside 63..=126"))),
        None => Err(parse_err(at, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, lead + HEADER.len()),
        None => (trimmed, lead),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 string"));
    }
    if let Some(bad) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(
            base + bad,
            format!("byte 0x{:02x} outside 63..=126", bytes[bad]),
        ));
    }
    let shift = |e: Error| match e {
        Error::Graph6 { offset, message } => parse_err(offset + base, message),
        other => other,
    };

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0).map_err(shift)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(shift)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i).map_err(shift)?;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            base + bytes.len().min(expected),
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        ));
    }

    let mut adj = vec![Vec::new(); n];
    let mut bit = 0;
    let mut current = 0;
    let mut remaining = 0;
    for j in 1..n {
        for i in 0..j {
            if remaining == 0 {
                current = sextet(bytes, pos).map_err(shift)?;
                pos += 1;
                remaining = 6;
            }
            remaining -= 1;
            if (current >> remaining) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, bits);
    if remaining > 0 && current & ((1 << remaining) - 1) != 0 {
        return Err(parse_err(base + pos - 1, "nonzero padding bits"));
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}
