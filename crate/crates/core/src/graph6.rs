//! graph6 codec.
//!
//! One size byte `n + 63`, then the upper triangle read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per byte, most
//! significant bit first, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const MAX_SINGLE_BYTE_N: usize = 62;

/// Whether nonzero padding bits are rejected when decoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strictness {
    #[default]
    Strict,
    Lenient,
}

pub fn encode(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > MAX_SINGLE_BYTE_N {
        return Err(Error::UnsupportedSize(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + OFFSET);
    }
    Ok(out)
}

/// graph6 as a `String`; the format is printable ASCII so this cannot fail
/// for graphs within the size limit.
pub fn encode_string(g: &Graph) -> String {
    let bytes = encode(g).expect("graphs never exceed the graph6 single-byte size range");
    String::from_utf8(bytes).expect("graph6 is ASCII")
}

pub fn decode(s: &[u8]) -> Result<Graph> {
    decode_with(s, Strictness::Strict)
}

pub fn decode_with(s: &[u8], mode: Strictness) -> Result<Graph> {
    let (&first, payload) = s.split_first().ok_or_else(|| Error::Malformed("empty input".into()))?;
    if let Some(pos) = s.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(Error::Malformed(format!("byte {:#04x} at offset {pos} outside 63..126", s[pos])));
    }
    if first == 126 {
        return Err(Error::SizeLimit(MAX_VERTICES + 1));
    }
    let n = (first - OFFSET) as usize;
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if payload.len() < need {
        return Err(Error::Malformed(format!("expected {need} payload bytes, found {}", payload.len())));
    }
    if payload.len() > need {
        return Err(Error::Malformed(format!("{} trailing bytes", payload.len() - need)));
    }
    let mut rows = [0u32; MAX_VERTICES];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = payload[bit / 6] - OFFSET;
            if group >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if mode == Strictness::Strict && !nbits.is_multiple_of(6) {
        let last = payload[need - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Malformed("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_rows_unchecked(n, &rows))
}

/// Parses newline separated records, skipping blank lines and the optional
/// `>>graph6<<` header. Errors carry the 1-based line number.
pub fn decode_lines(text: &str, mode: Strictness) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut rec = line.trim();
        if let Some(rest) = rec.strip_prefix(">>graph6<<") {
            rec = rest;
        }
        if rec.is_empty() {
            continue;
        }
        out.push(decode_with(rec.as_bytes(), mode).map_err(|e| (i + 1, e))?);
    }
    Ok(out)
}
