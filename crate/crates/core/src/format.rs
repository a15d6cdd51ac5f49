//! Text formats: edge lists, homomorphism certificates and blow-up
//! decompositions.
//!
//! Edge list (canonical form):
//!
//! ```text
//! n m
//! u v        (m lines, u < v, sorted lexicographically)
//! ```
//!
//! Lines starting with `#` are comments. The parser also accepts blank
//! lines, CRLF endings and edges in either orientation or order; the
//! writer always emits the canonical form with LF endings.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("missing header line")]
    MissingHeader,

    #[error("header announces {expected} records but {found} were given")]
    CountMismatch { expected: usize, found: usize },

    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| syntax(line, format!("expected a non-negative integer, got {tok:?}")))
        })
        .collect()
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize), ParseError> {
    match parse_numbers(line, s)?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(syntax(line, "expected exactly two integers")),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m.min(4096));
    for (line, s) in lines {
        if edges.len() == m {
            return Err(ParseError::CountMismatch {
                expected: m,
                found: m + 1,
            });
        }
        edges.push(parse_pair(line, s)?);
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parsed form of a certificate file: the vertex map and the target's
/// vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateRecord {
    pub target_n: usize,
    pub map: Vec<usize>,
}

/// `hom n m_target` followed by one line of `n` images.
pub fn write_certificate(map: &[usize], target_n: usize) -> String {
    let images: Vec<String> = map.iter().map(|v| v.to_string()).collect();
    format!("hom {} {}\n{}\n", map.len(), target_n, images.join(" "))
}

pub fn parse_certificate(text: &str) -> Result<CertificateRecord, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let rest = header
        .strip_prefix("hom")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| syntax(hline, "certificate must start with `hom`"))?;
    let (n, target_n) = parse_pair(hline, rest)?;
    let map = match lines.next() {
        Some((line, s)) => parse_numbers(line, s)?,
        None => Vec::new(),
    };
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected trailing content"));
    }
    if map.len() != n {
        return Err(ParseError::CountMismatch {
            expected: n,
            found: map.len(),
        });
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= target_n) {
        return Err(ParseError::Graph(GraphError::IndexOutOfRange {
            vertex: bad,
            n: target_n,
        }));
    }
    Ok(CertificateRecord { target_n, map })
}

/// One line per class, classes in base-vertex order.
pub fn write_decomposition(classes: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for class in classes {
        let items: Vec<String> = class.iter().map(|v| v.to_string()).collect();
        out.push_str(&items.join(" "));
        out.push('\n');
    }
    out
}

/// Comment lines are skipped but blank lines are not: a class is never
/// empty, so a blank line is an error.
pub fn parse_decomposition(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let class = parse_numbers(i + 1, l)?;
            if class.is_empty() {
                Err(syntax(i + 1, "empty class"))
            } else {
                Ok(class)
            }
        })
        .collect()
}
