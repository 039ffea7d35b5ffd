//! graph6 encoding (short form) and catalog reading.
//!
//! The upper triangle is read column by column (`x(0,1), x(0,2), x(1,2), ...`),
//! packed big-endian into 6-bit groups and offset by 63.

use std::io::BufRead;

use crate::error::{Error, Graph6ErrorKind, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

/// Optional header emitted by nauty tools.
pub const HEADER: &str = ">>graph6<<";

fn err(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6 { offset, kind }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((row >> i) & 1) as u8;
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
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    let sixbit = |pos: usize| -> Result<u8> {
        match bytes.get(pos) {
            None => Err(err(pos, Graph6ErrorKind::Truncated)),
            Some(&c) if (63..=126).contains(&c) => Ok(c - 63),
            Some(&c) => Err(err(pos, Graph6ErrorKind::BadChar(c))),
        }
    };
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            // 8-byte form encodes n >= 258063, far beyond capacity.
            return Err(err(1, Graph6ErrorKind::VertexCount(usize::MAX)));
        }
        let n = (0..3).try_fold(0usize, |acc, k| Ok::<_, Error>((acc << 6) | sixbit(1 + k)? as usize))?;
        (n, 4)
    } else {
        (sixbit(0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(err(0, Graph6ErrorKind::VertexCount(n)));
    }
    let mut rows = [0u64; MAX_VERTICES];
    let mut chunk = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                chunk = sixbit(pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if (chunk >> left) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    if pos != bytes.len() {
        return Err(err(pos, Graph6ErrorKind::TrailingData));
    }
    Ok(Graph::with_rows(n, &rows))
}

/// Reads a graph6 catalog: one graph per line, LF or CRLF, blank lines and an
/// optional `>>graph6<<` header ignored.
///
/// Yields `(line_number, graph)` with 1-based line numbers.
pub fn read_catalog<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, Graph)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| {
            let line_no = idx + 1;
            let line = match line {
                Ok(l) => l,
                Err(e) => return Some(Err(Error::from(e))),
            };
            let mut text = line.trim_end_matches(['\r', '\n']);
            if line_no == 1 {
                text = text.strip_prefix(HEADER).unwrap_or(text);
            }
            if text.is_empty() {
                return None;
            }
            Some(decode(text).map(|g| (line_no, g)).map_err(|e| Error::Catalog {
                line: line_no,
                message: e.to_string(),
            }))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, flower};
    use proptest::prelude::*;

    #[test]
    fn small_codes() {
        assert_eq!(encode(&complete_graph(3).unwrap()), "Bw");
        assert_eq!(decode("Bw").unwrap(), complete_graph(3).unwrap());
        assert_eq!(encode(&complete_graph(1).unwrap()), "@");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        let g = decode("B?").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
    }

    #[test]
    fn matches_reference_encoding() {
        // A-C, A-E, B-D, D-E on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn long_form_vertex_count() {
        let g = complete_graph(64).unwrap();
        let code = encode(&g);
        assert!(code.starts_with("~?@?"));
        assert_eq!(decode(&code).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(decode(""), Err(err(0, Graph6ErrorKind::Empty)));
        assert_eq!(decode("B"), Err(err(1, Graph6ErrorKind::Truncated)));
        assert_eq!(decode("B w"), Err(err(1, Graph6ErrorKind::BadChar(b' '))));
        assert_eq!(decode("Bww"), Err(err(2, Graph6ErrorKind::TrailingData)));
        assert!(matches!(
            decode("~?@@"),
            Err(Error::Graph6 { kind: Graph6ErrorKind::VertexCount(65), .. })
        ));
        assert!(decode("~~").is_err());
    }

    #[test]
    fn catalog_skips_header_and_crlf() {
        let text = ">>graph6<<\r\nBw\r\n\nB?\n";
        let graphs: Vec<_> = read_catalog(text.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0], (2, complete_graph(3).unwrap()));
        assert_eq!(graphs[1].0, 4);

        let inline_header = ">>graph6<<Bw\n";
        let graphs: Vec<_> = read_catalog(inline_header.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(graphs.len(), 1);

        let bad = "Bw\nB!\n";
        let res: Result<Vec<_>> = read_catalog(bad.as_bytes()).collect();
        assert!(matches!(res, Err(Error::Catalog { line: 2, .. })));
    }

    #[test]
    fn flower_round_trip() {
        let g = flower(4, 5, 3).unwrap();
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=64).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |flags| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if flags[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
