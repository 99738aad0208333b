//! Plain-text instance formats.
//!
//! Graphs use the MQLib edge list: a header `n m`, then `m` lines `i j w` with 1-based
//! node indices. QUBOs use a header `n`, then lines `i j q` with `j >= i`, 0-based.
//! Blank lines and lines starting with `#` are ignored by the readers.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{MaxCutGraph, QuboProblem};
use crate::error::{Error, Result};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("invalid {what}") })
}

pub fn parse_graph(text: &str) -> Result<MaxCutGraph> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let mut tok = header.split_whitespace();
    let n: usize = field(tok.next(), hl, "node count")?;
    let m: usize = field(tok.next(), hl, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let mut tok = line.split_whitespace();
        let i: usize = field(tok.next(), ln, "node index")?;
        let j: usize = field(tok.next(), ln, "node index")?;
        let w: f64 = field(tok.next(), ln, "weight")?;
        if i == 0 || j == 0 {
            return Err(Error::Parse { line: ln, msg: "node indices are 1-based".into() });
        }
        edges.push((i - 1, j - 1, w));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: hl, msg: format!("header declares {m} edges, found {}", edges.len()) });
    }
    MaxCutGraph::new(n, edges)
}

pub fn format_graph(g: &MaxCutGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.num_edges());
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.i + 1, e.j + 1, e.w).unwrap();
    }
    out
}

pub fn parse_qubo(text: &str) -> Result<QuboProblem> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let n: usize = field(header.split_whitespace().next(), hl, "variable count")?;
    let mut terms = Vec::new();
    for (ln, line) in lines {
        let mut tok = line.split_whitespace();
        let i: usize = field(tok.next(), ln, "row index")?;
        let j: usize = field(tok.next(), ln, "column index")?;
        let q: f64 = field(tok.next(), ln, "coefficient")?;
        terms.push((i, j, q));
    }
    QuboProblem::new(n, terms)
}

pub fn format_qubo(q: &QuboProblem) -> String {
    let mut out = format!("{}\n", q.n());
    for &(i, j, v) in q.terms() {
        writeln!(out, "{i} {j} {v}").unwrap();
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<MaxCutGraph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &MaxCutGraph) -> Result<()> {
    Ok(fs::write(path, format_graph(g))?)
}

pub fn read_qubo(path: impl AsRef<Path>) -> Result<QuboProblem> {
    parse_qubo(&fs::read_to_string(path)?)
}

pub fn write_qubo(path: impl AsRef<Path>, q: &QuboProblem) -> Result<()> {
    Ok(fs::write(path, format_qubo(q))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_text_round_trip() {
        let text = "3 2\n1 2 1.5\n2 3 -0.25\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.weight(0, 1), 1.5);
        assert_eq!(g.weight(1, 2), -0.25);
        assert_eq!(format_graph(&g), text);
    }

    #[test]
    fn qubo_text_round_trip() {
        let text = "2\n0 0 1\n0 1 -2.5\n";
        let q = parse_qubo(text).unwrap();
        assert_eq!(q.get(0, 1), -2.5);
        assert_eq!(format_qubo(&q), text);
    }

    #[test]
    fn graph_parse_errors() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 2\n1 2 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n1 x 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn qubo_rejects_lower_triangle() {
        assert!(parse_qubo("2\n1 0 1\n").is_err());
    }
}
