//! Text interchange: graph6 lines and a plain edge-list format.
//!
//! graph6 here covers graphs with at most 62 vertices (single-byte size header).
//! Adjacency bits run over the upper triangle column by column, `(0,1), (0,2),
//! (1,2), (0,3), ...`, six bits per character, each character offset by 63.

use thiserror::Error;

use crate::graph::{bit, Graph, GraphError};

/// Largest order encodable with a one-byte graph6 header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("character {ch:?} at offset {offset} is outside the graph6 range 63..=126")]
    BadCharacter { ch: char, offset: usize },
    #[error("graph6 body has {found} characters, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("nonzero padding bits in graph6 body")]
    NonzeroPadding,
    #[error("graph6 supports at most {GRAPH6_MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(ParseError::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(ParseError::BadHeader);
    }
    if head == 126 {
        // Multi-byte size headers only occur for n >= 63.
        return Err(ParseError::TooLarge(63));
    }
    let n = (head - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(ParseError::BadLength {
            expected,
            found: body.len(),
        });
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    let total = n * n.saturating_sub(1) / 2;
    for (offset, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(ParseError::BadCharacter {
                ch: c as char,
                offset: offset + 1,
            });
        }
        let chunk = c - 63;
        for shift in (0..6).rev() {
            let set = chunk >> shift & 1 == 1;
            if k >= total {
                if set {
                    return Err(ParseError::NonzeroPadding);
                }
            } else if set {
                let (i, j) = pair_at(k);
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// `(i, j)` for the `k`-th bit of the column-major upper triangle.
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Encodes `g` as a graph6 line (no trailing newline).
///
/// Panics if `g` has more than [`GRAPH6_MAX_VERTICES`] vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= GRAPH6_MAX_VERTICES, "graph6 header limited to n <= 62");
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses one or more edge-list blocks: an `n m` header followed by `m`
/// lines `u v`. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut graphs = Vec::new();
    while let Some((line, header)) = lines.next() {
        let [n, m] = two_numbers(header, line)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, l) = lines.next().ok_or(ParseError::EdgeList {
                line,
                message: format!("expected {m} edge lines after header"),
            })?;
            let [u, v] = two_numbers(l, line)?;
            edges.push((u, v));
        }
        let g = Graph::from_edge_list(n, edges).map_err(|e| ParseError::EdgeList {
            line,
            message: e.to_string(),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Parses a single edge-list block.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut graphs = parse_edge_lists(text)?;
    match graphs.len() {
        0 => Err(ParseError::Empty),
        1 => Ok(graphs.pop().unwrap()),
        k => Err(ParseError::EdgeList {
            line: 0,
            message: format!("expected one graph, found {k}"),
        }),
    }
}

fn two_numbers(l: &str, line: usize) -> Result<[usize; 2], ParseError> {
    let err = |message: String| ParseError::EdgeList { line, message };
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| err("expected two integers".into()))?;
        tok.parse().map_err(|_| err(format!("not an integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(err("trailing tokens".into()));
    }
    Ok([a, b])
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
