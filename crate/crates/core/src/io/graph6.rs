//! graph6 encoding (short and 4-byte length forms).
//!
//! Layout: a length prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), …`),
//! packed six bits per byte, most significant first, each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest order representable in the 4-byte length form.
pub const MAX_ORDER: usize = 258_047;

/// Order limit used by [`parse_graph6`].
pub const DEFAULT_ORDER_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 alphabet")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed length prefix at offset {offset}")]
    BadLength { offset: usize },
    #[error("order {n} at offset {offset} exceeds the limit {limit}")]
    OrderTooLarge { offset: usize, n: usize, limit: usize },
    #[error("graph6 string encodes zero vertices")]
    NoVertices,
    #[error("adjacency data truncated at offset {offset}: expected {expected} bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("unexpected trailing byte at offset {offset}")]
    TrailingBytes { offset: usize },
    #[error("non-zero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("cannot encode a graph of order {0} (max {MAX_ORDER})")]
    EncodeTooLarge(usize),
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_ORDER {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    } else {
        return Err(Graph6Error::EncodeTooLarge(n));
    }

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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_bytes(text.as_bytes(), DEFAULT_ORDER_LIMIT)
}

/// Parses one graph6 record. An optional `>>graph6<<` header and one
/// trailing newline are accepted; error offsets index into `input`.
pub fn parse_graph6_bytes(input: &[u8], order_limit: usize) -> Result<Graph, Graph6Error> {
    let mut start = 0;
    if input.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
    }
    let mut end = input.len();
    if input[start..end].ends_with(b"\n") {
        end -= 1;
        if input[start..end].ends_with(b"\r") {
            end -= 1;
        }
    }
    let body = &input[start..end];
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset: start + pos,
            byte: body[pos],
        });
    }

    let (n, header_len) = if body[0] < 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        // 8-byte form: orders beyond anything this crate handles.
        return Err(Graph6Error::OrderTooLarge {
            offset: start,
            n: MAX_ORDER + 1,
            limit: order_limit.min(MAX_ORDER),
        });
    } else if body.len() >= 4 {
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        return Err(Graph6Error::BadLength { offset: start });
    };
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    if n > order_limit {
        return Err(Graph6Error::OrderTooLarge {
            offset: start,
            n,
            limit: order_limit,
        });
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    let data_offset = start + header_len;
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: data_offset + data.len(),
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            offset: data_offset + expected,
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = data[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: data_offset + expected - 1,
            });
        }
    }

    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &pairs).expect("decoded pairs are in range and loop-free"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, ridged};

    #[test]
    fn reference_strings() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(parse_graph6("C~").unwrap(), complete(4).unwrap());
        assert_eq!(encode_graph6(&complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(encode_graph6(&complete(4).unwrap()).unwrap(), "C~");
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("A_\r\n").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn long_form() {
        let g = ridged(30).unwrap();
        let s = encode_graph6(&g).unwrap();
        // n = 90 = 1·64 + 26
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 89]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A "),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated {
                offset: 1,
                expected: 1,
                found: 0
            })
        );
        assert_eq!(parse_graph6("A_?"), Err(Graph6Error::TrailingBytes { offset: 2 }));
        assert_eq!(parse_graph6("A@"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::BadLength { offset: 0 }));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::NoVertices));
        assert!(matches!(
            parse_graph6("~~??????"),
            Err(Graph6Error::OrderTooLarge { .. })
        ));
    }
}
