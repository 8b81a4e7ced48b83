//! graph6 codec, bit-exact with the format used by the standard enumeration
//! tools: 6-bit groups biased by 63, upper adjacency triangle in column-major
//! order `x(0,1), x(0,2), x(1,2), x(0,3), ...`.
//!
//! Decoding is strict so that `encode(decode(s)) == s` holds whenever decode
//! succeeds: exact body length, zero padding bits, and the 4-byte size block
//! only for orders 63 and 64. sparse6 and digraph6 inputs are rejected with
//! their own errors.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

/// Optional file-header prefix emitted by some tools.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("sparse6 input (':' prefix) is not supported")]
    Sparse6Unsupported,
    #[error("digraph6 input ('&' prefix) is not supported")]
    Digraph6Unsupported,
    #[error("invalid size byte {0:#04x}")]
    InvalidSizeChar(u8),
    #[error("truncated size block")]
    TruncatedSize,
    #[error("long-form size {0} is non-canonical (orders below 63 use one byte)")]
    NonCanonicalSize(usize),
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    OrderOutOfRange(usize),
    #[error("body has {got} bytes, expected {expected}")]
    BodyLength { expected: usize, got: usize },
    #[error("invalid body byte {byte:#04x} at offset {pos}")]
    InvalidChar { byte: u8, pos: usize },
    #[error("padding bits are not zero")]
    NonZeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decode one graph6 string (an optional `>>graph6<<` prefix is allowed).
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b':' {
        return Err(Graph6Error::Sparse6Unsupported);
    }
    if bytes[0] == b'&' {
        return Err(Graph6Error::Digraph6Unsupported);
    }

    let (n, body) = match bytes[0] {
        126 => {
            // '~': 18-bit size in three more bytes. '~~' starts the 36-bit
            // form, whose orders all exceed the 64-vertex cap.
            if bytes.len() < 2 {
                return Err(Graph6Error::TruncatedSize);
            }
            if bytes[1] == 126 {
                if bytes.len() < 8 {
                    return Err(Graph6Error::TruncatedSize);
                }
                let mut n = 0usize;
                for (i, &b) in bytes[2..8].iter().enumerate() {
                    if !(63..=126).contains(&b) {
                        return Err(Graph6Error::InvalidChar {
                            byte: b,
                            pos: 2 + i,
                        });
                    }
                    n = (n << 6) | (b - 63) as usize;
                }
                return Err(Graph6Error::OrderOutOfRange(n));
            }
            if bytes.len() < 4 {
                return Err(Graph6Error::TruncatedSize);
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(Graph6Error::InvalidChar {
                        byte: b,
                        pos: 1 + i,
                    });
                }
                n = (n << 6) | (b - 63) as usize;
            }
            if n < 63 {
                return Err(Graph6Error::NonCanonicalSize(n));
            }
            (n, &bytes[4..])
        }
        b if (63..126).contains(&b) => ((b - 63) as usize, &bytes[1..]),
        b => return Err(Graph6Error::InvalidSizeChar(b)),
    };

    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BodyLength {
            expected,
            got: body.len(),
        });
    }

    let nbits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for (pos, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { byte: b, pos });
        }
        let group = b - 63;
        for k in 0..6 {
            let set = (group >> (5 - k)) & 1 == 1;
            if bit < nbits {
                let (i, j) = pairs.next().expect("pair iterator covers nbits");
                if set {
                    edges.push((i, j));
                }
            } else if set {
                return Err(Graph6Error::NonZeroPadding);
            }
            bit += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded edges are in range"))
}

/// Encode a graph in canonical graph6 form.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Iterate the non-empty lines of a newline-delimited graph6 file, decoding
/// each. Line numbers are 1-based; a `>>graph6<<` header on the first line is
/// handled by `decode`.
pub fn decode_lines(text: &str) -> impl Iterator<Item = (usize, Result<Graph, Graph6Error>)> + '_ {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| (i + 1, decode(line.trim())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_k2() {
        let g = decode("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn decode_k3() {
        // bits 111000 -> byte 119 = 'w'
        let g = decode("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn encode_p3() {
        // bits 101000 -> byte 103 = 'g'
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&g), "Bg");
    }

    #[test]
    fn roundtrip_small() {
        for s in ["A_", "A?", "Bw", "Bg", "C~", "D?{", "E?~o"] {
            if let Ok(g) = decode(s) {
                assert_eq!(encode(&g), s, "roundtrip of {s}");
            }
        }
    }

    #[test]
    fn header_prefix_accepted() {
        let g = decode(">>graph6<<Bw").unwrap();
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn long_size_block() {
        // order 63: '~' then 63 in three 6-bit groups (0, 0, 63)
        let k63_empty = Graph::new(63, &[]).unwrap();
        let s = encode(&k63_empty);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), k63_empty);

        let g64 = Graph::new(64, &[(0, 63)]).unwrap();
        assert_eq!(decode(&encode(&g64)).unwrap(), g64);
    }

    #[test]
    fn rejects() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode(":Bw"), Err(Graph6Error::Sparse6Unsupported));
        assert_eq!(decode("&AG"), Err(Graph6Error::Digraph6Unsupported));
        assert_eq!(decode("\u{7f}"), Err(Graph6Error::InvalidSizeChar(0x7f)));
        assert!(matches!(decode("B"), Err(Graph6Error::BodyLength { .. })));
        assert!(matches!(decode("Bww"), Err(Graph6Error::BodyLength { .. })));
        assert_eq!(
            decode("A1"),
            Err(Graph6Error::InvalidChar { byte: b'1', pos: 0 })
        );
        // n=2 needs one bit; a second set bit is padding
        assert_eq!(decode("Aw"), Err(Graph6Error::NonZeroPadding));
        // long form used for a small order
        assert_eq!(decode("~??A"), Err(Graph6Error::NonCanonicalSize(2)));
        // n = 0 and n = 66 are outside the supported order range
        assert_eq!(decode("?"), Err(Graph6Error::OrderOutOfRange(0)));
        assert_eq!(decode("~?@A"), Err(Graph6Error::OrderOutOfRange(66)));
    }

    #[test]
    fn line_iteration() {
        let text = ">>graph6<<A_\n\nBw\nA1\n";
        let items: Vec<_> = decode_lines(text).collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].0, 1);
        assert!(items[0].1.is_ok());
        assert!(items[1].1.is_ok());
        assert_eq!(items[2].0, 4);
        assert!(items[2].1.is_err());
    }
}
