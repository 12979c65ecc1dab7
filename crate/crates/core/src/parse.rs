//! graph6 and plain edge-list input.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed input at byte {offset}: {reason}")]
    Syntax { offset: usize, reason: String },
    #[error("invalid graph ({invariant}): {0}", invariant = .0.invariant())]
    Invalid(#[from] GraphError),
}

fn syntax(offset: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        reason: reason.into(),
    }
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. Edges are numbered in row-major order of the
/// upper triangle, i.e. sorted by `(u, v)` with `u < v`.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, bytes) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(syntax(base + i, format!("byte 0x{b:02x} outside 0x3f..=0x7e")));
        }
    }
    let (n, header_len) = decode_order(bytes).map_err(|off| syntax(base + off, "truncated vertex count"))?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge {
            n,
            limit: MAX_VERTICES,
        }
        .into());
    }
    let body = &bytes[header_len..];
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(syntax(
            base + header_len + body.len().min(needed),
            format!("expected {needed} adjacency bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::new(n, edges)?)
}

/// Returns `(n, bytes consumed)` or the offset where input ran out.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), usize> {
    let digits = |from: usize, count: usize| -> Result<usize, usize> {
        let chunk = bytes.get(from..from + count).ok_or(bytes.len())?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    match bytes {
        [] => Err(0),
        [126, 126, ..] => Ok((digits(2, 6)?, 8)),
        [126, ..] => Ok((digits(1, 3)?, 4)),
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | adjacent[u * n + v] as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// A graph read from an edge list, with the original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `labels[x]` is the input label of vertex `x`; increasing.
    pub labels: Vec<u64>,
}

/// Parses whitespace-separated label pairs, one edge per line. Blank lines
/// and lines starting with `#` are skipped. Labels are compacted to
/// `0..n` in numeric order; edges keep file order.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut raw = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut fields = content.split_whitespace();
        let mut label = || -> Result<u64, ParseError> {
            let field = fields.next().ok_or_else(|| syntax(start, "expected two vertex labels"))?;
            field
                .parse::<u64>()
                .map_err(|_| syntax(start, format!("`{field}` is not a nonnegative integer")))
        };
        let pair = (label()?, label()?);
        if fields.next().is_some() {
            return Err(syntax(start, "more than two fields on an edge line"));
        }
        raw.push(pair);
    }
    if raw.is_empty() {
        return Err(GraphError::NoEdges.into());
    }
    let mut labels: Vec<u64> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() > MAX_VERTICES {
        return Err(GraphError::TooLarge {
            n: labels.len(),
            limit: MAX_VERTICES,
        }
        .into());
    }
    let index = |l: u64| labels.binary_search(&l).expect("label collected above");
    let edges = raw.iter().map(|&(a, b)| (index(a), index(b))).collect();
    let graph = Graph::new(labels.len(), edges)?;
    Ok(LabeledGraph { graph, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decodes_k4_and_c4() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));

        // Reference decoding (networkx): [(0,1),(0,2),(1,3),(2,3)].
        let c4 = parse_graph6("Cr\n").unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(c4.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn decodes_with_header() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn rejects_bad_bytes() {
        let err = parse_graph6("C!").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                offset: 1,
                reason: "byte 0x21 outside 0x3f..=0x7e".into()
            }
        );
        assert!(matches!(parse_graph6(""), Err(ParseError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_graph6("C~~"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_graph6("C"), Err(ParseError::Syntax { offset: 1, .. })));
    }

    #[test]
    fn graph6_validation_errors_name_invariant() {
        // One edge 1-3, vertices 0 and 2 isolated.
        let err = parse_graph6("CA").unwrap_err();
        assert!(matches!(err, ParseError::Invalid(GraphError::Disconnected { .. })));
        assert!(err.to_string().contains("connected"));
        let err = parse_graph6("C?").unwrap_err();
        assert!(matches!(err, ParseError::Invalid(GraphError::NoEdges)));
    }

    #[test]
    fn petersen_and_k33_strings() {
        // Reference strings (networkx) for the standard Petersen graph and K_{3,3}.
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert_eq!(p.regular_degree(), Some(3));
        let k33 = parse_graph6("EFz_").unwrap();
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        assert_eq!(to_graph6(&k33), "EFz_");
    }

    #[test]
    fn long_order_form() {
        let n = 70;
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::new(n, edges).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back.vertex_count(), n);
        assert_eq!(back.edge_count(), n);
    }

    #[test]
    fn edge_list_cases() {
        let tri = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(tri.graph.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            parse_edge_list("0 1\n2 3"),
            Err(ParseError::Invalid(GraphError::Disconnected { .. }))
        ));
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(ParseError::Invalid(GraphError::Loop { .. }))
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 0\n"),
            Err(ParseError::Invalid(GraphError::DuplicateEdge { .. }))
        ));
        assert!(matches!(
            parse_edge_list("0 1\nx 2"),
            Err(ParseError::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("\n# nothing\n"),
            Err(ParseError::Invalid(GraphError::NoEdges))
        ));
    }

    #[test]
    fn edge_list_compacts_labels() {
        let g = parse_edge_list("# square\n10 30\n30 20\n20 40\n40 10\n").unwrap();
        assert_eq!(g.labels, vec![10, 20, 30, 40]);
        assert_eq!(g.graph.edges(), &[(0, 2), (1, 2), (1, 3), (0, 3)]);
    }

    fn connected_graph() -> impl Strategy<Value = Graph> {
        (2usize..12)
            .prop_flat_map(|n| {
                let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
                let extra = proptest::collection::vec((0..n, 0..n), 0..n * 2);
                (Just(n), parents, extra)
            })
            .prop_map(|(n, parents, extra)| {
                let mut pairs: Vec<(usize, usize)> =
                    parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
                pairs.extend(extra.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))));
                pairs.sort_unstable();
                pairs.dedup();
                Graph::new(n, pairs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn graph6_roundtrip(g in connected_graph()) {
            let s = to_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_graph6(&back), s);
            prop_assert_eq!(back.degrees().iter().sum::<usize>(), 2 * back.edge_count());
        }
    }
}
