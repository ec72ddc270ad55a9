//! Edge-list and sparse6 input/output.
//!
//! The edge-list format is line-oriented: a header `n m`, then exactly `m`
//! lines `u v`. Duplicate lines encode parallel edges. Lines whose first
//! non-blank character is `#` are comments; blank lines are skipped. Error
//! positions are 1-based line numbers over the raw input.
//!
//! sparse6 is the standard multigraph-capable format: an optional
//! `>>sparse6<<` header, a `:` marker, the vertex count, then a bit stream of
//! (b, x) pairs. Parallel edges round-trip; loops are rejected because the
//! graph type has none.

use super::{Multigraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected {expected}, got {got:?}")]
    Malformed { line: usize, expected: &'static str, got: String },
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: VertexId },
    #[error("line {line}: vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { line: usize, vertex: VertexId, vertex_count: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("sparse6: {0}")]
    Sparse6(String),
}

pub fn parse_edge_list(input: &str) -> Result<Multigraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if header.is_none() {
            if fields.len() != 2 {
                return Err(ParseError::Malformed {
                    line: line_no,
                    expected: "header `n m`",
                    got: line.to_string(),
                });
            }
            let n = parse_number(fields[0], line_no, "vertex count")?;
            let m = parse_number(fields[1], line_no, "edge count")?;
            header = Some((n, m, line_no));
            continue;
        }
        if fields.len() != 2 {
            return Err(ParseError::Malformed {
                line: line_no,
                expected: "edge `u v`",
                got: line.to_string(),
            });
        }
        let u = parse_number(fields[0], line_no, "vertex id")?;
        let v = parse_number(fields[1], line_no, "vertex id")?;
        edges.push((u, v));
        edge_lines.push(line_no);
    }

    let (n, m, _) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found: edges.len() });
    }
    for (&(u, v), &line) in edges.iter().zip(&edge_lines) {
        if u == v {
            return Err(ParseError::LoopEdge { line, vertex: u });
        }
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, vertex_count: n });
            }
        }
    }
    Ok(Multigraph::from_edges(n, &edges).expect("validated above"))
}

fn parse_number(s: &str, line: usize, what: &'static str) -> Result<usize, ParseError> {
    s.parse().map_err(|_| ParseError::Malformed { line, expected: what, got: s.to_string() })
}

/// Canonical edge-list text: header, then one `u v` line per edge in id order,
/// endpoints in stored orientation. `parse_edge_list` inverts this exactly.
pub fn serialize_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const SPARSE6_HEADER: &str = ">>sparse6<<";

/// Number of bits needed for values `0..n`, at least 1.
fn index_bits(n: usize) -> usize {
    if n <= 2 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

struct BitWriter {
    bytes: Vec<u8>,
    used: usize, // bits used in the current 6-bit group
}

impl BitWriter {
    fn new() -> Self {
        BitWriter { bytes: Vec::new(), used: 0 }
    }

    fn push_bit(&mut self, bit: bool) {
        if self.used == 0 {
            self.bytes.push(0);
        }
        if bit {
            let last = self.bytes.last_mut().unwrap();
            *last |= 1 << (5 - self.used);
        }
        self.used = (self.used + 1) % 6;
    }

    fn push_value(&mut self, value: usize, bits: usize) {
        for i in (0..bits).rev() {
            self.push_bit(value >> i & 1 == 1);
        }
    }

    fn padding_needed(&self) -> usize {
        if self.used == 0 {
            0
        } else {
            6 - self.used
        }
    }
}

/// Encodes in sparse6 with the standard `>>sparse6<<` header omitted; the
/// decoder accepts either form.
pub fn encode_sparse6(g: &Multigraph) -> String {
    let n = g.vertex_count();
    let k = index_bits(n);

    let mut body = BitWriter::new();
    let mut sorted: Vec<(VertexId, VertexId)> =
        g.edges().iter().map(|&(u, v)| (u.max(v), u.min(v))).collect();
    sorted.sort_unstable();

    let mut v: usize = 0;
    let mut last_emitted_v = None;
    for (hi, lo) in sorted {
        if hi == v {
            body.push_bit(false);
            body.push_value(lo, k);
        } else if hi == v + 1 {
            v += 1;
            body.push_bit(true);
            body.push_value(lo, k);
        } else {
            v = hi;
            body.push_bit(true);
            body.push_value(hi, k);
            body.push_bit(false);
            body.push_value(lo, k);
        }
        last_emitted_v = Some(v);
    }

    // Pad with 1s. If n = 2^k (k < 6), a full pad group starting with 1 would
    // decode as an edge at vertex n-1 when the stream stops at v = n-2, so a
    // single 0 bit goes first in that case.
    let pad = body.padding_needed();
    if pad > k
        && k < 6
        && n == (1usize << k)
        && last_emitted_v == Some(n - 2)
    {
        body.push_bit(false);
    }
    while body.used != 0 {
        body.push_bit(true);
    }

    let mut out = String::from(":");
    push_sparse6_order(&mut out, n);
    for b in body.bytes {
        out.push((b + 63) as char);
    }
    out
}

fn push_sparse6_order(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
}

pub fn decode_sparse6(input: &str) -> Result<Multigraph, ParseError> {
    let s = input.trim();
    let s = s.strip_prefix(SPARSE6_HEADER).unwrap_or(s);
    let s = s
        .strip_prefix(':')
        .ok_or_else(|| ParseError::Sparse6("missing ':' marker".into()))?;

    let raw: Vec<u8> = s.bytes().collect();
    for &b in &raw {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Sparse6(format!("byte {b} out of printable range")));
        }
    }
    let vals: Vec<u8> = raw.iter().map(|&b| b - 63).collect();

    let (n, mut pos) = if vals.is_empty() {
        return Err(ParseError::Sparse6("empty body".into()));
    } else if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 4 && vals[1] < 63 {
        let n = (vals[1] as usize) << 12 | (vals[2] as usize) << 6 | vals[3] as usize;
        (n, 4)
    } else if vals.len() >= 8 {
        let mut n = 0usize;
        for &v in &vals[2..8] {
            n = n << 6 | v as usize;
        }
        (n, 8)
    } else {
        return Err(ParseError::Sparse6("truncated vertex count".into()));
    };

    let k = index_bits(n);
    let mut bits: Vec<bool> = Vec::with_capacity((vals.len() - pos) * 6);
    while pos < vals.len() {
        let v = vals[pos];
        for i in (0..6).rev() {
            bits.push(v >> i & 1 == 1);
        }
        pos += 1;
    }

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut v: usize = 0;
    let mut cursor = 0;
    while cursor + 1 + k <= bits.len() {
        let b = bits[cursor];
        let mut x = 0usize;
        for i in 0..k {
            x = x << 1 | bits[cursor + 1 + i] as usize;
        }
        cursor += 1 + k;
        if b {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(ParseError::Sparse6(format!("loop at vertex {v}")));
        } else {
            edges.push((x, v));
        }
    }

    Multigraph::from_edges(n, &edges)
        .map_err(|e| ParseError::Sparse6(format!("invalid edge stream: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Multigraph {
        Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    /// sparse6 forgets edge order and orientation; compare as multisets.
    fn same_multiset(a: &Multigraph, b: &Multigraph) -> bool {
        let norm = |g: &Multigraph| {
            let mut v: Vec<(usize, usize)> =
                g.edges().iter().map(|&(u, w)| (u.min(w), u.max(w))).collect();
            v.sort_unstable();
            v
        };
        a.vertex_count() == b.vertex_count() && norm(a) == norm(b)
    }

    #[test]
    fn parse_basic_with_comments() {
        let g = parse_edge_list("# triangle with a doubled edge\n3 4\n0 1\n0 2\n1 2\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges_between(1, 2), vec![2, 3]);
    }

    #[test]
    fn parse_duplicate_lines_are_parallel_edges() {
        let g = parse_edge_list("2 3\n0 1\n0 1\n0 1\n").unwrap();
        assert_eq!(g, theta());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("3 3\n0 0\n0 1\n1 2\n"),
            Err(ParseError::LoopEdge { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("2 1\n0 7\n"),
            Err(ParseError::VertexOutOfRange { line: 2, vertex: 7, vertex_count: 2 })
        );
        assert_eq!(
            parse_edge_list("# c\n\n2 1\nnope\n"),
            Err(ParseError::Malformed { line: 4, expected: "edge `u v`", got: "nope".into() })
        );
        assert_eq!(
            parse_edge_list("2 1\n0 x\n"),
            Err(ParseError::Malformed { line: 2, expected: "vertex id", got: "x".into() })
        );
        assert_eq!(parse_edge_list("3 2\n0 1\n"), Err(ParseError::EdgeCountMismatch { expected: 2, found: 1 }));
        assert_eq!(parse_edge_list("# only comments\n"), Err(ParseError::MissingHeader));
    }

    #[test]
    fn serialize_then_parse_is_identity() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let text = serialize_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(text, "4 6\n0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n");
    }

    // Reference vector from the format's specification document: the graph
    // with 7 vertices and edges 01 02 12 56 encodes as ":Fa@x^".
    #[test]
    fn sparse6_reference_vector() {
        let g = Multigraph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (5, 6)]).unwrap();
        assert_eq!(encode_sparse6(&g), ":Fa@x^");
        let d = decode_sparse6(":Fa@x^").unwrap();
        assert_eq!(d.vertex_count(), 7);
        let mut got: Vec<(usize, usize)> = d.edges().to_vec();
        got.sort_unstable();
        assert_eq!(got, vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
        // Header form accepted too.
        assert_eq!(decode_sparse6(">>sparse6<<:Fa@x^").unwrap(), d);
    }

    #[test]
    fn sparse6_multigraph_roundtrip() {
        let g = theta();
        let s = encode_sparse6(&g);
        let d = decode_sparse6(&s).unwrap();
        assert!(same_multiset(&d, &g));
        assert_eq!(d.edges_between(0, 1).len(), 3);
    }

    #[test]
    fn sparse6_rejects_loops() {
        // Hand-built stream for n=2, k=1: pair (0,1) would mean edge {1,1}
        // after a (1,x=1) pair raises v to 1: bits 1 1 ... -> value 0b110000.
        let mut s = String::from(":A");
        s.push((0b110000u8 + 63) as char);
        match decode_sparse6(&s) {
            Err(ParseError::Sparse6(msg)) => assert!(msg.contains("loop")),
            other => panic!("expected loop rejection, got {other:?}"),
        }
    }

    #[test]
    fn sparse6_power_of_two_padding() {
        // n = 4 = 2^k with an edge stream ending at v = n-2 exercises the
        // 0-then-1s padding rule; the decoder must not invent edges.
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = encode_sparse6(&g);
        let d = decode_sparse6(&s).unwrap();
        assert!(same_multiset(&d, &g));
    }

    #[test]
    fn sparse6_isolated_vertices_survive() {
        let g = Multigraph::from_edges(9, &[(2, 5)]).unwrap();
        let d = decode_sparse6(&encode_sparse6(&g)).unwrap();
        assert_eq!(d.vertex_count(), 9);
        assert_eq!(d.edges(), &[(2, 5)]);
    }

    #[test]
    fn sparse6_large_order_prefix() {
        let g = Multigraph::from_edges(100, &[(0, 99), (98, 99)]).unwrap();
        let s = encode_sparse6(&g);
        assert!(s.starts_with(":~"));
        assert!(same_multiset(&decode_sparse6(&s).unwrap(), &g));
    }
}
