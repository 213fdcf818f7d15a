//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`
//! (0-based). `#` starts a comment; blank lines are skipped.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers, got `{text}`")]
    Arity { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range 0..{n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    CountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let arity = || EdgeListError::Arity {
        line,
        text: text.to_string(),
    };
    let mut it = text.split_whitespace();
    let a = it.next().and_then(|s| s.parse().ok()).ok_or_else(arity)?;
    let b = it.next().and_then(|s| s.parse().ok()).ok_or_else(arity)?;
    if it.next().is_some() {
        return Err(arity());
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = pair(hline, header)?;
    if n == 0 {
        return Err(GraphError::NoVertices.into());
    }

    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, body) in lines {
        let (u, v) = pair(line, body)?;
        if let Some(vertex) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(EdgeListError::OutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::Duplicate { line, u, v });
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(EdgeListError::CountMismatch {
            declared: m,
            found: pairs.len(),
        });
    }
    Ok(Graph::new(n, &pairs)?)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path, ridged};

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edge_list("2 1\n0 1").unwrap(), complete(2).unwrap());
        assert_eq!(parse_edge_list("3 2\n0 1\n1 2").unwrap(), path(3).unwrap());
        let commented = "# a path\n3 2\n\n0 1  # first\n1 2\n";
        assert_eq!(parse_edge_list(commented).unwrap(), path(3).unwrap());
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_edge_list("2 1\n0 0"),
            Err(EdgeListError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("2 1\n0 5"),
            Err(EdgeListError::OutOfRange { line: 2, vertex: 5, n: 2 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0"),
            Err(EdgeListError::Duplicate { line: 3, u: 1, v: 0 })
        );
        assert!(matches!(
            parse_edge_list("3 2\n0 1 2"),
            Err(EdgeListError::Arity { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(EdgeListError::CountMismatch { declared: 2, found: 1 })
        );
        assert_eq!(parse_edge_list("# nothing\n"), Err(EdgeListError::MissingHeader));
    }

    #[test]
    fn format_round_trips() {
        let g = ridged(4).unwrap();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }
}
