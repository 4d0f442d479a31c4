//! Edge-list text format.
//!
//! ```text
//! n m directed|undirected
//! u v
//! ...
//! ```
//!
//! Exactly `m` edge lines follow the header, with 0-based vertex ids.
//! Blank lines are ignored.

use std::io::BufRead;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    Header { line: usize, reason: String },
    #[error("line {line}: expected two vertex ids \"u v\"")]
    Edge { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: header declares {expected} edges but {found} were given")]
    EdgeCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
}

impl ParseError {
    /// 1-based line the error refers to, when there is one.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Header { line, .. }
            | ParseError::Edge { line }
            | ParseError::Graph { line, .. }
            | ParseError::EdgeCount { line, .. } => Some(*line),
            ParseError::Io(_) => None,
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_lines(text.lines().map(|l| Ok(l.to_owned())))
}

pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph, ParseError> {
    parse_lines(reader.lines())
}

fn parse_lines<I>(lines: I) -> Result<Graph, ParseError>
where
    I: Iterator<Item = std::io::Result<String>>,
{
    let mut lines = lines
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l)))
        .filter(|r| r.as_ref().map_or(true, |(_, l)| !l.trim().is_empty()));

    let (header_line, header) = match lines.next() {
        Some(r) => r?,
        None => {
            return Err(ParseError::Header {
                line: 1,
                reason: "empty input".into(),
            });
        }
    };
    let (n, m, directed) = parse_header(header_line, &header)?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for r in lines {
        let (line, text) = r?;
        last_line = line;
        if edges.len() == m {
            return Err(ParseError::EdgeCount {
                line,
                expected: m,
                found: m + 1,
            });
        }
        let (u, v) = parse_edge(&text).ok_or(ParseError::Edge { line })?;
        for w in [u, v] {
            if w >= n {
                let source = GraphError::VertexOutOfRange { vertex: w, n };
                return Err(ParseError::Graph { line, source });
            }
        }
        if u == v {
            return Err(ParseError::Graph {
                line,
                source: GraphError::SelfLoop(u),
            });
        }
        edges.push((line, u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            line: last_line,
            expected: m,
            found: edges.len(),
        });
    }

    let pairs: Vec<_> = edges.iter().map(|&(_, u, v)| (u, v)).collect();
    Graph::new(n, directed, &pairs).map_err(|source| {
        // Only duplicates can reach here; report the later occurrence.
        let line = match &source {
            GraphError::DuplicateEdge(a, b) => edges
                .iter()
                .filter(|&&(_, u, v)| (u, v) == (*a, *b) || (!directed && (v, u) == (*a, *b)))
                .nth(1)
                .map_or(header_line, |&(l, _, _)| l),
            _ => header_line,
        };
        ParseError::Graph { line, source }
    })
}

fn parse_header(line: usize, text: &str) -> Result<(usize, usize, bool), ParseError> {
    let err = |reason: &str| ParseError::Header {
        line,
        reason: reason.to_owned(),
    };
    let fields: Vec<&str> = text.split_whitespace().collect();
    let [n, m, kind] = fields[..] else {
        return Err(err("expected \"n m directed|undirected\""));
    };
    let n = n
        .parse()
        .map_err(|_| err("vertex count is not a non-negative integer"))?;
    let m = m
        .parse()
        .map_err(|_| err("edge count is not a non-negative integer"))?;
    let directed = match kind {
        "directed" => true,
        "undirected" => false,
        _ => return Err(err("third field must be \"directed\" or \"undirected\"")),
    };
    Ok((n, m, directed))
}

fn parse_edge(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let u = it.next()?.parse().ok()?;
    let v = it.next()?.parse().ok()?;
    it.next().is_none().then_some((u, v))
}
