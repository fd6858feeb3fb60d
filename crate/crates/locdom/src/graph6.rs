//! Encoder/decoder for the standard graph6 ASCII format (one graph per
//! line, no header). Orders up to 64 are supported, so both the one-byte
//! and the `~`-prefixed four-byte order encodings occur.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Encodes a graph as a canonical graph6 string (upper triangle,
/// column-major bit order).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // 63 <= n <= 258047: '~' then three 6-bit digits, big-endian
        out.push(b'~');
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).unwrap()
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let err = |offset, reason: &str| Error::Graph6 {
        offset,
        reason: reason.into(),
    };
    if bytes.is_empty() {
        return Err(err(0, "empty string"));
    }
    let sixbit = |b: u8, offset: usize| -> Result<usize> {
        if !(63..=126).contains(&b) {
            Err(err(offset, "byte outside graph6 alphabet 63..=126"))
        } else {
            Ok((b - 63) as usize)
        }
    };
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(err(1, "truncated extended order field"));
        }
        if bytes[1] == b'~' {
            return Err(err(1, "orders above 258047 are not supported"));
        }
        let n = sixbit(bytes[1], 1)? << 12 | sixbit(bytes[2], 2)? << 6 | sixbit(bytes[3], 3)?;
        (n, 4)
    } else {
        (sixbit(bytes[0], 0)?, 1)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(err(0, "order 0 or above the supported maximum of 64"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(err(
            bytes.len().min(pos + nbytes),
            "length does not match declared order",
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut acc = 0usize;
    let mut have = 0;
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if have == 0 {
                acc = sixbit(bytes[pos], pos)?;
                pos += 1;
                have = 6;
            }
            if acc >> (have - 1) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            have -= 1;
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero for a canonical string
    if have > 0 && acc & ((1 << have) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

/// Parses one graph per nonempty line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode)
        .collect()
}
