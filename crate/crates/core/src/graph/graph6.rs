//! graph6 decoding and encoding.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("size header is truncated")]
    TruncatedHeader,
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("bit stream truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("vertex count mismatch: {n} vertices need {expected} data bytes, found {found}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        found: usize,
    },
}

const HEADER: &str = ">>graph6<<";

/// Decodes a single graph6 record (surrounding whitespace and the optional
/// `>>graph6<<` prefix are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed).as_bytes();
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset,
            byte: body[offset],
        });
    }
    let (n, header_len) = decode_size(body)?;
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let data = &body[header_len..];
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::LengthMismatch {
            n,
            expected,
            found: data.len(),
        });
    }
    let mut adjacent = vec![false; n * n];
    let mut bit = 0usize;
    for y in 1..n {
        for x in 0..y {
            let group = data[bit / 6] - 63;
            if group & (1 << (5 - bit % 6)) != 0 {
                adjacent[x * n + y] = true;
                adjacent[y * n + x] = true;
            }
            bit += 1;
        }
    }
    Graph::from_adjacency(n, adjacent, format!("graph6:\"{}\"", String::from_utf8_lossy(body)))
        .map_err(|_| unreachable!("graph6 decoding always yields a simple graph"))
}

fn decode_size(body: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let groups = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
    };
    match body {
        [126, 126, rest @ ..] => {
            let digits = rest.get(..6).ok_or(Graph6Error::TruncatedHeader)?;
            Ok((groups(digits), 8))
        }
        [126, rest @ ..] => {
            let digits = rest.get(..3).ok_or(Graph6Error::TruncatedHeader)?;
            Ok((groups(digits), 4))
        }
        [first, ..] => Ok((usize::from(first - 63), 1)),
        [] => Err(Graph6Error::Empty),
    }
}

/// Encodes a graph as graph6 (without the `>>graph6<<` prefix).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut group = 0u8;
    let mut filled = 0;
    for y in 1..n {
        for x in 0..y {
            group = (group << 1) | u8::from(g.is_adjacent(x, y));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct;
    use proptest::prelude::*;

    #[test]
    fn hand_decoded_examples() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.order(), k4.edge_count()), (4, 6));
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
        assert!(k2.is_adjacent(0, 1));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), k4);
    }

    #[test]
    fn petersen_record() {
        // The standard graph6 record for the Petersen graph.
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.order(), p.regularity(), p.edge_count()), (10, Some(3), 15));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated { expected: 1, found: 0 })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Graph6Error::LengthMismatch { n: 4, .. })
        ));
        assert!(matches!(
            parse_graph6("C\u{7f}"),
            Err(Graph6Error::InvalidByte { offset: 1, .. })
        ));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::TruncatedHeader));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::NoVertices));
    }

    #[test]
    fn long_header() {
        let g = construct("hamming(3,4)").unwrap();
        let encoded = to_graph6(&g);
        assert!(encoded.starts_with('~'));
        assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    proptest! {
        #[test]
        fn encode_decode_round_trip(n in 1usize..40, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for y in 1..n {
                for x in 0..y {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 1 == 1 {
                        edges.push((x, y));
                    }
                }
            }
            let g = Graph::from_edges(n, edges, "random").unwrap();
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
