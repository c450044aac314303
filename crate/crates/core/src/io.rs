//! Text formats for graphs and colourings.
//!
//! Graphs use the PACE 2017 `.gr` layout:
//!
//! ```text
//! c optional comment
//! p tw <n> <m>
//! <u> <v>        (m lines, 1-indexed)
//! ```
//!
//! Colourings use a `.col` layout with a `k <k>` header followed by
//! `<vertex> <colour>` lines. Lines starting with `c` are comments in both.

use std::fmt::Write as _;

use log::warn;

use crate::error::{Error, Result};
use crate::graph::{Colour, FullColouring, Graph, PartialColouring, Vertex};

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {field:?}")))
}

/// Parses a 1-indexed vertex id into an internal index.
pub(crate) fn parse_vertex(line: usize, field: &str, n: usize) -> Result<Vertex> {
    let v: usize = parse_num(line, field, "vertex id")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing 'p tw <n> <m>' header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(Error::parse(hline, "malformed header, expected 'p tw <n> <m>'"));
    }
    let n: usize = parse_num(hline, header[2], "vertex count")?;
    let m: usize = parse_num(hline, header[3], "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, fields) in lines {
        if fields.len() != 2 {
            return Err(Error::parse(line, "expected an edge line '<u> <v>'"));
        }
        let u = parse_vertex(line, fields[0], n)?;
        let v = parse_vertex(line, fields[1], n)?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop on vertex {}", u + 1)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            warn!("line {line}: duplicate edge {{{}, {}}} ignored", u + 1, v + 1);
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges but {} edge lines follow", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Canonical `.gr` text: edges ascending, `u < v`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_colouring(text: &str, g: &Graph) -> Result<PartialColouring> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing 'k <k>' header"))?;
    if header.len() != 2 || header[0] != "k" {
        return Err(Error::parse(hline, "malformed header, expected 'k <k>'"));
    }
    let k: u32 = parse_num(hline, header[1], "colour count")?;
    if k == 0 {
        return Err(Error::parse(hline, "k must be at least 1"));
    }
    let mut col = PartialColouring::new(g.n(), k);
    for (line, fields) in lines {
        if fields.len() != 2 {
            return Err(Error::parse(line, "expected '<vertex> <colour>'"));
        }
        let v = parse_vertex(line, fields[0], g.n())?;
        let c: Colour = parse_num(line, fields[1], "colour")?;
        if c == 0 || c > k {
            return Err(Error::parse(line, format!("colour {c} out of range 1..={k}")));
        }
        if col.get(v).is_some() {
            return Err(Error::parse(line, format!("vertex {} assigned twice", v + 1)));
        }
        col.set(v, c)?;
    }
    Ok(col)
}

pub fn write_colouring(col: &PartialColouring) -> String {
    let mut out = format!("k {}\n", col.k());
    for (v, c) in col.assignment().iter().enumerate() {
        if let Some(c) = c {
            let _ = writeln!(out, "{} {}", v + 1, c);
        }
    }
    out
}

pub fn write_full_colouring(col: &FullColouring) -> String {
    let mut out = format!("k {}\n", col.k());
    for (v, c) in col.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{} {}", v + 1, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_graphs() {
        let g = parse_graph("p tw 2 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        let g = parse_graph("c comment\np tw 3 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
        let g = parse_graph("p tw 3 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn graph_errors_name_lines() {
        let err = parse_graph("p tw 2 1\n1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_graph("p tw 2 1\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(matches!(parse_graph("p td 2 1\n1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_graph("p tw 2 2\n1 2\n").is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_graph("p tw 2 2\n1 2\n2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn canonical_output() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(write_graph(&g), "p tw 2 1\n1 2\n");
        assert_eq!(write_graph(&Graph::empty(1)), "p tw 1 0\n");
        let k3 = Graph::from_edges(3, [(2, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(write_graph(&k3), "p tw 3 3\n1 2\n1 3\n2 3\n");
    }

    #[test]
    fn colouring_files() {
        let g = Graph::empty(5);
        let col = parse_colouring("k 3\n1 1\n4 2\n", &g).unwrap();
        assert_eq!(col.k(), 3);
        assert_eq!(col.assignment(), &[Some(1), None, None, Some(2), None]);
        let empty = parse_colouring("k 2\n", &g).unwrap();
        assert_eq!((empty.k(), empty.coloured_count()), (2, 0));
        assert!(parse_colouring("k 2\n1 3\n", &g).is_err());
        assert!(parse_colouring("k 2\n9 1\n", &g).is_err());
        assert!(parse_colouring("k 2\n1 1\n1 2\n", &g).is_err());
        assert_eq!(parse_colouring(&write_colouring(&col), &g).unwrap(), col);
    }

    proptest! {
        #[test]
        fn graph_round_trip(n in 1usize..30, raw in proptest::collection::vec((0usize..30, 0usize..30), 0..80)) {
            let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
    }
}
