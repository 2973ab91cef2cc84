//! graph6 text encoding.
//!
//! A graph6 line is the order `n` (one byte `n + 63` for `n <= 62`)
//! followed by the upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, most significant
//! bit first, each byte offset by 63. Only the short order header is ever
//! produced since graphs here have at most 32 vertices.

use super::graph::{check_order, Graph, MAX_ORDER};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decode one graph6 line. Trailing whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let (start, line) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let bytes = line.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(parse_error(start, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(parse_error(start + i, format!("byte 0x{b:02x} outside the printable range 63..=126")));
        }
    }
    let (n, header_len) = if bytes[0] == 126 {
        // long orders: 18-bit (or 36-bit) big-endian after one or two '~'
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(parse_error(start + bytes.len(), "truncated 36-bit order header"));
            }
            let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
            (n, 8)
        } else {
            if bytes.len() < 4 {
                return Err(parse_error(start + bytes.len(), "truncated 18-bit order header"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
            (n, 4)
        }
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::Capacity { order: n, max: MAX_ORDER });
    }
    check_order(n).map_err(|_| parse_error(start, "graph6 order 0 is not a graph here"))?;
    let body = &bytes[header_len..];
    let expected = body_len(n);
    if body.len() != expected {
        return Err(parse_error(
            start + header_len + body.len().min(expected),
            format!("expected {expected} data bytes for order {n}, found {}", body.len()),
        ));
    }

    let mut rows = vec![0u32; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = body[bit / 6] - OFFSET;
        if last & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(parse_error(start + header_len + bit / 6, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_encodings() {
        assert_eq!(encode(&Graph::path(1).unwrap()), "@");
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(2).unwrap()), "A?");
        // P_3 with edges 01, 12: bits (0,1)=1, (0,2)=0, (1,2)=1 -> 101000
        assert_eq!(encode(&Graph::path(3).unwrap()), "Bg");
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn decode_known() {
        assert_eq!(decode("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4).unwrap());
        // Petersen graph as printed by nauty's geng
        let petersen = decode("IheA@GUAo").unwrap();
        assert_eq!((petersen.order(), petersen.size()), (10, 15));
        assert!(petersen.is_regular());
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("C~~"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode("C"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("A 1"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("A`"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("~?@?"), Err(Error::Capacity { order: 64, .. })));
        // order 33 in a single header byte
        let big = format!("{}", (33 + 63) as u8 as char);
        assert!(matches!(decode(&big), Err(Error::Capacity { order: 33, .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=10, bits in any::<u64>()) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits >> (k % 64) & 1 == 1 {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let text = encode(&g);
            prop_assert_eq!(decode(&text).unwrap(), g);
        }
    }
}
