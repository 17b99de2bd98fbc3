//! Plain-text edge-list format.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! n 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The header `n <count>` comes first, followed by one whitespace-separated
//! `u v` pair per line, vertices indexed from 0.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a nonnegative integer, found {token:?}")))
}

/// Parses an edge list into a validated [`Graph`].
pub fn parse_edge_list(input: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match order {
            None => {
                if tokens.len() != 2 || tokens[0] != "n" {
                    return Err(parse_err(line, "expected header `n <count>`"));
                }
                let n = parse_index(tokens[1], line)?;
                if n == 0 || n > crate::graph::MAX_ORDER {
                    return Err(parse_err(line, format!("vertex count {n} out of range")));
                }
                order = Some(n);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(parse_err(line, "expected an edge `u v`"));
                }
                let u = parse_index(tokens[0], line)?;
                let v = parse_index(tokens[1], line)?;
                if u >= n || v >= n {
                    return Err(parse_err(line, format!("vertex out of range 0..{n}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = order.ok_or_else(|| parse_err(0, "missing header `n <count>`"))?;
    Graph::from_edges(n, edges)
}

/// Byte-level entry point; rejects input that is not UTF-8.
pub fn parse_edge_list_bytes(input: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(input).map_err(|e| parse_err(0, format!("invalid UTF-8: {e}")))?;
    parse_edge_list(text)
}

/// Serializes a graph with edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.order()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
