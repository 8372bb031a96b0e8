//! Edge-list text format.
//!
//! ```text
//! # comment
//! p 4 2
//! e 0 1
//! e 2 3
//! ```
//!
//! The `p <n> <m>` header is optional; without it `n` is one more than the
//! largest id seen. Ids are 0-based. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        kind: ParseErrorKind::Malformed(msg.into()),
    }
}

fn number(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| {
        malformed(
            line,
            format!("expected a non-negative integer, got `{tok}`"),
        )
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<usize> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut max_id: Option<VertexId> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(malformed(line, "duplicate header"));
                }
                if !edges.is_empty() {
                    return Err(malformed(line, "header after edges"));
                }
                // accept the DIMACS `p edge <n> <m>` spelling too
                let nums = match toks.len() {
                    3 => &toks[1..],
                    4 if toks[1].parse::<usize>().is_err() => &toks[2..],
                    _ => return Err(malformed(line, "expected `p <n> <m>`")),
                };
                let n = number(nums[0], line)?;
                number(nums[1], line)?;
                header = Some(n);
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(malformed(line, "expected `e <u> <v>`"));
                }
                let u = number(toks[1], line)?;
                let v = number(toks[2], line)?;
                if let Some(n) = header {
                    if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
                        return Err(ParseError {
                            line,
                            kind: ParseErrorKind::OutOfRange { vertex, n },
                        });
                    }
                }
                if u == v {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::SelfLoop(u),
                    });
                }
                max_id = max_id.max(Some(u.max(v)));
                edges.push((u, v));
            }
            other => return Err(malformed(line, format!("unknown record `{other}`"))),
        }
    }

    let n = header.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Ok(Graph::from_edges(n, edges).expect("ids and loops validated per line"))
}

/// Canonical text: header, then edges `u < v` in lexicographic order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn read_graph_file(path: &Path) -> Result<Graph, ReadError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_graph(&text)?)
}
