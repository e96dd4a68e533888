//! graph6 codec and DOT output.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encodes `g` as graph6: order prefix, then the upper triangle column by
/// column (`x(0,1) x(0,2) x(1,2) x(0,3) ..`) packed six bits per byte, +63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6) + 4);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let rows = g.rows();
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for row in &rows[..j] {
            acc = acc << 1 | (row >> j & 1) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; errors carry the byte offset of the fault.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    let header = b">>graph6<<";
    if bytes[pos..].starts_with(header) {
        pos += header.len();
    }
    let mut end = bytes.len();
    while end > pos && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let body = &bytes[pos..end];
    if body.is_empty() {
        return Err(g6_err(pos, "empty input"));
    }
    let sym = |i: usize| -> Result<u64> {
        let b = body[i];
        if (63..=126).contains(&b) {
            Ok(u64::from(b - 63))
        } else {
            Err(g6_err(
                pos + i,
                format!("byte 0x{b:02x} outside the graph6 range"),
            ))
        }
    };
    let (n, data_start) = if body[0] == 126 {
        if body.len() >= 2 && body[1] == 126 {
            return Err(g6_err(pos + 1, "orders beyond 258047 are not supported"));
        }
        if body.len() < 4 {
            return Err(g6_err(pos + body.len(), "truncated order field"));
        }
        let n = (sym(1)? << 12 | sym(2)? << 6 | sym(3)?) as usize;
        (n, 4)
    } else {
        (sym(0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(g6_err(
            pos,
            format!("order {n} exceeds capacity {MAX_ORDER}"),
        ));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let data = &body[data_start..];
    if data.len() < need {
        return Err(g6_err(
            pos + body.len(),
            format!("expected {need} data bytes, found {}", data.len()),
        ));
    }
    if data.len() > need {
        return Err(g6_err(
            pos + data_start + need,
            "trailing bytes after adjacency data",
        ));
    }
    let mut rows = vec![0u64; n];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let word = sym(data_start + bit / 6)?;
            if word >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if need > 0 {
        let last = sym(data_start + need - 1)?;
        let pad = need * 6 - nbits;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(pos + data_start + need - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Graphviz rendering; vertex labels are used when present.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "\\\""));
    for v in 0..g.order() {
        match g.label(v) {
            Some(l) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // Reference strings from the graph6 format description and nauty's geng.
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        // petgraph's graph6 test graph: edges a-c, a-e, b-d, d-e.
        let g = Graph::build(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn wide_orders() {
        let g = Graph::path(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn parse_errors_report_offsets() {
        assert_eq!(
            parse_graph6(""),
            Err(Error::Graph6 {
                offset: 0,
                reason: "empty input".into()
            })
        );
        match parse_graph6("D h") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_graph6("Dh"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("Dhcc"),
            Err(Error::Graph6 { offset: 3, .. })
        ));
        // 'B' = 3 vertices, 3 bits; 'A'+63 has low padding bits set.
        assert!(matches!(
            parse_graph6("B@"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(parse_graph6(">>graph6<<Dhc\n").is_ok());
        assert!(matches!(parse_graph6("~~"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn dot_has_labels() {
        let g = Graph::path(2)
            .unwrap()
            .with_labels(vec!["u1", "v1"])
            .unwrap();
        let d = to_dot(&g, "g");
        assert!(d.contains("label=\"u1\""));
        assert!(d.contains("0 -- 1;"));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..40).prop_map(move |es| {
                let es: Vec<_> = es
                    .into_iter()
                    .filter(|(u, v)| u != v && *u < n && *v < n)
                    .collect();
                Graph::build(n, &es).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = to_graph6(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
