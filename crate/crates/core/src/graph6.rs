//! graph6 encoding for graphs of order at most 62.
//!
//! One header byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), …`), six bits per
//! byte, most significant first, each byte offset by 63. The final byte is
//! zero-padded.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, MAX_ORDER};
use crate::{Error, Result};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Error::MalformedHeader)?;
    if !(63..=126).contains(&header) {
        return Err(Error::MalformedHeader);
    }
    let n = (header - 63) as usize;
    if n > MAX_ORDER {
        // 126 introduces the multi-byte order form, beyond the supported range
        return Err(Error::MalformedHeader);
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Truncated);
    }
    if body.len() > need {
        return Err(Error::TrailingGarbage);
    }
    let mut values = Vec::with_capacity(need);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::InvalidByte(b));
        }
        values.push(b - 63);
    }
    let pad = need * 6 - bits;
    if let Some(&last) = values.last() {
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::NonCanonicalPadding);
        }
    }
    let bit = |idx: usize| values[idx / 6] >> (5 - idx % 6) & 1 == 1;
    let mut rows = alloc::vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Graph::from_adjacency(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_encodings() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(encode(&k2), "A_");
        assert_eq!(encode(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(encode(&c5), "Dhc");
        assert_eq!(decode("Dhc").unwrap(), c5);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode(""), Err(Error::MalformedHeader));
        assert_eq!(decode(" "), Err(Error::MalformedHeader));
        assert_eq!(decode("~"), Err(Error::MalformedHeader));
        assert_eq!(decode("D"), Err(Error::Truncated));
        assert_eq!(decode("A_?"), Err(Error::TrailingGarbage));
        // K2 has one bit; '`' sets a padding bit
        assert_eq!(decode("A`"), Err(Error::NonCanonicalPadding));
        assert_eq!(decode("?"), Err(Error::EmptyGraph));
        assert_eq!(decode("A\x7f"), Err(Error::InvalidByte(0x7f)));
    }

    #[test]
    fn largest_order_round_trips() {
        let g = Graph::from_edges(62, (1..62).map(|i| (i - 1, i))).unwrap();
        let s = encode(&g);
        assert_eq!(s.len(), 1 + (62 * 61 / 2usize).div_ceil(6));
        assert_eq!(decode(&s).unwrap(), g);
    }
}
