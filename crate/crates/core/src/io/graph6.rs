//! The graph6 format: an order prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const MAX_ORDER: u64 = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("input ends at offset {offset} inside the {what}")]
    Truncated { offset: usize, what: &'static str },
    #[error("unexpected trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    Padding { offset: usize },
    #[error("order {0} is too large")]
    TooLarge(u64),
}

fn value(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=MAX_BYTE).contains(&b) => Ok((b - BIAS) as u64),
        Some(&b) => Err(Graph6Error::BadByte { offset, byte: b }),
        None => Err(Graph6Error::Truncated {
            offset,
            what: "order prefix",
        }),
    }
}

/// Decodes the order prefix; returns `(n, bytes consumed)`.
fn parse_order(bytes: &[u8], start: usize) -> Result<(u64, usize), Graph6Error> {
    let read = |count: usize, from: usize| -> Result<u64, Graph6Error> {
        (from..from + count).try_fold(0u64, |acc, i| Ok(acc << 6 | value(bytes, i)?))
    };
    match bytes.get(start) {
        None => Err(Graph6Error::Empty),
        Some(&MAX_BYTE) if bytes.get(start + 1) == Some(&MAX_BYTE) => Ok((read(6, start + 2)?, 8)),
        Some(&MAX_BYTE) => Ok((read(3, start + 1)?, 4)),
        Some(_) => Ok((value(bytes, start)?, 1)),
    }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and a trailing
/// line break are tolerated; anything else after the record is an error.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &text[..end];
    let start = if bytes.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let (n, used) = parse_order(bytes, start)?;
    if n > MAX_ORDER || n > usize::MAX as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let body = start + used;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() < body + needed {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            what: "adjacency data",
        });
    }
    if bytes.len() > body + needed {
        return Err(Graph6Error::Trailing {
            offset: body + needed,
        });
    }

    let mut g = Graph::edgeless(n);
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let offset = body + k / 6;
            let chunk = value(bytes, offset)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if needed > 0 {
        let offset = body + needed - 1;
        let pad = needed * 6 - bits;
        if value(bytes, offset)? & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding { offset });
        }
    }
    Ok(g)
}

pub fn parse_graph6_str(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6(text.as_bytes())
}

/// Encodes `g` without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(MAX_BYTE);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([MAX_BYTE, MAX_BYTE]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        let nb = g.neighbors(v);
        for u in 0..v {
            chunk = chunk << 1 | nb.contains(u) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};
    use proptest::prelude::*;

    #[test]
    fn single_vertex() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!(g, complete(1));
        assert_eq!(to_graph6(&g), "@");
        assert_eq!(to_graph6(&Graph::edgeless(0)), "?");
    }

    #[test]
    fn path_on_four_vertices() {
        // Pairs in column order: 01 02 12 03 13 23 -> bits 101001 = 41, 41 + 63 = 'h'.
        assert_eq!(to_graph6(&path(4)), "Ch");
    }

    #[test]
    fn five_vertex_round_trip() {
        // '?' -> 000000, '{' -> 111100: pairs 04 14 24 34 set, two padding zeros.
        let g = parse_graph6(b"D?{").unwrap();
        let expected = Graph::from_edge_list(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn header_and_newline_are_tolerated() {
        assert_eq!(parse_graph6(b">>graph6<<Ch\n").unwrap(), path(4));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(b"C"),
            Err(Graph6Error::Truncated {
                offset: 1,
                what: "adjacency data"
            })
        );
        assert_eq!(
            parse_graph6(b"Chx"),
            Err(Graph6Error::Trailing { offset: 2 })
        );
        assert_eq!(
            parse_graph6(b"C "),
            Err(Graph6Error::BadByte {
                offset: 1,
                byte: b' '
            })
        );
        // 'D' has 10 bits; '@' sets a padding bit.
        assert_eq!(
            parse_graph6(b"D?@"),
            Err(Graph6Error::Padding { offset: 2 })
        );
        assert!(matches!(
            parse_graph6(b"~?"),
            Err(Graph6Error::Truncated { .. })
        ));
    }

    #[test]
    fn large_orders_use_long_prefix() {
        let g = path(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6_str(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=70, seed in any::<u64>()) {
            let g = crate::generators::random_graph(n, 0.4, seed);
            let s = to_graph6(&g);
            prop_assert_eq!(parse_graph6_str(&s).unwrap(), g);
        }
    }
}
