use crate::graph::{Graph, GraphError};
use std::collections::HashSet;
use thiserror::Error;

/// Errors from [`parse_graph`], with 1-based line numbers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: header must be two integers \"n m\"")]
    HeaderSyntax { line: usize },
    #[error("line {line}: edge must be two integers \"u v\"")]
    EdgeSyntax { line: usize },
    #[error("line {line}: endpoint {value} outside 1..={n}")]
    EndpointOutOfRange { line: usize, value: usize, n: usize },
    #[error("line {line}: edge endpoints must satisfy u < v")]
    EdgeOrder { line: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("header declared {expected} edges, found {found}")]
    TooFewEdges { expected: usize, found: usize },
    #[error("line {line}: content after the declared edges")]
    TrailingContent { line: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses the graph text format: a header `n m`, then `m` lines `u v` with
/// `1 <= u < v <= n`. Lines that are blank or start with `#` are skipped.
/// Vertices are 1-indexed in the text and 0-indexed in the returned graph.
pub fn parse_graph(input: &str) -> Result<Graph, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut fields = header.split_whitespace();
    let n: usize = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::HeaderSyntax { line: header_line })?;
    let m: usize = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::HeaderSyntax { line: header_line })?;
    if fields.next().is_some() {
        return Err(ParseError::HeaderSyntax { line: header_line });
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m.min(1 << 16));
    let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(m.min(1 << 16));
    for (line, text) in lines.by_ref() {
        if edges.len() == m {
            return Err(ParseError::TrailingContent { line });
        }
        let mut fields = text.split_whitespace();
        let (u, v) = match (
            fields.next().and_then(|t| t.parse::<usize>().ok()),
            fields.next().and_then(|t| t.parse::<usize>().ok()),
            fields.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::EdgeSyntax { line }),
        };
        for value in [u, v] {
            if value < 1 || value > n {
                return Err(ParseError::EndpointOutOfRange { line, value, n });
            }
        }
        if u >= v {
            return Err(ParseError::EdgeOrder { line });
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line });
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() < m {
        return Err(ParseError::TooFewEdges { expected: m, found: edges.len() });
    }

    // A connected graph has at least n - 1 edges; checking before
    // construction keeps declared-but-absurd vertex counts from allocating.
    if n > m.saturating_add(1) {
        return Err(ParseError::Graph(GraphError::Disconnected));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Renders a graph in the text format with sorted, 1-indexed edges. Output
/// round-trips through [`parse_graph`].
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
