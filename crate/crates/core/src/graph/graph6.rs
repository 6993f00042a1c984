//! graph6 short form (orders up to 62).

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Graph6(format!(
            "order {n} needs the long form, only n <= {GRAPH6_MAX_ORDER} is supported"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if first == 126 {
        return Err(Error::Graph6("long form (n > 62) is not supported".into()));
    }
    if !(63..=125).contains(&first) {
        return Err(Error::Graph6(format!("invalid order byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("order 0 graphs are not representable".into()));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} edge bytes, found {}",
            body.len()
        )));
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "invalid character {:?} at offset {}",
            body[pos] as char,
            pos + 1
        )));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit_at) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
