//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! n 5
//! e 1 2
//! e 2 3
//! ```
//!
//! Vertices are 1-based in text. Blank lines and `#` comments may appear
//! anywhere; the `n` header must precede every edge.

use gsbound_core::{Graph, MAX_VERTICES};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("duplicate `n` header")]
    DuplicateHeader,
    #[error("vertex count {0} outside [1, {MAX_VERTICES}]")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

fn number(token: &str, line: &str) -> Result<usize, ParseErrorKind> {
    token
        .parse()
        .map_err(|_| ParseErrorKind::Malformed(line.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |kind| ParseError {
            line: line_no,
            kind,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if graph.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let n = number(count, line).map_err(err)?;
                if !(1..=MAX_VERTICES).contains(&n) {
                    return Err(err(ParseErrorKind::VertexCount(n)));
                }
                graph = Some(Graph::edgeless(n).expect("count checked"));
            }
            ["e", a, b] => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                let n = g.n();
                let a = number(a, line).map_err(err)?;
                let b = number(b, line).map_err(err)?;
                for v in [a, b] {
                    if v == 0 || v > n {
                        return Err(err(ParseErrorKind::VertexOutOfRange { vertex: v, n }));
                    }
                }
                if a == b {
                    return Err(err(ParseErrorKind::SelfLoop(a)));
                }
                if g.has_edge(a - 1, b - 1) {
                    return Err(err(ParseErrorKind::DuplicateEdge(a.min(b), a.max(b))));
                }
                g.add_edge(a - 1, b - 1).expect("edge validated");
            }
            _ => return Err(err(ParseErrorKind::Malformed(line.to_string()))),
        }
    }
    graph.ok_or(ParseError {
        line: last_line.max(1),
        kind: ParseErrorKind::MissingHeader,
    })
}

/// Header then edges in lexicographic order, 1-based.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (a, b) in g.edges() {
        writeln!(out, "e {} {}", a + 1, b + 1).expect("writing to a String");
    }
    out
}
