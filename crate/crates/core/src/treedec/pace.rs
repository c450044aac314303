use std::fmt::Write as _;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{content_lines, parse_num, parse_vertex};

/// Parses a PACE 2017 `.td` file:
///
/// ```text
/// s td <bags> <width + 1> <n>
/// b <bag-id> <v>...
/// <a> <b>
/// ```
pub fn parse_td(text: &str, g: &Graph) -> Result<TreeDecomposition> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing 's td' header"))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(Error::parse(hline, "malformed header, expected 's td <bags> <w+1> <n>'"));
    }
    let count: usize = parse_num(hline, header[2], "bag count")?;
    let declared: usize = parse_num(hline, header[3], "bag size")?;
    let n: usize = parse_num(hline, header[4], "vertex count")?;
    if n != g.n() {
        return Err(Error::parse(
            hline,
            format!("decomposition is for {n} vertices but graph has {}", g.n()),
        ));
    }

    let mut bags: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut edges = Vec::new();
    for (line, fields) in lines {
        if fields[0] == "b" {
            if fields.len() < 2 {
                return Err(Error::parse(line, "bag line without id"));
            }
            let id = parse_vertex(line, fields[1], count)
                .map_err(|_| Error::parse(line, format!("bag id {} out of range", fields[1])))?;
            if bags[id].is_some() {
                return Err(Error::parse(line, format!("bag {} defined twice", id + 1)));
            }
            let bag = fields[2..]
                .iter()
                .map(|f| parse_vertex(line, f, n))
                .collect::<Result<Vec<_>>>()?;
            bags[id] = Some(bag);
        } else {
            if fields.len() != 2 {
                return Err(Error::parse(line, "expected a tree edge '<a> <b>'"));
            }
            let a = parse_vertex(line, fields[0], count)?;
            let b = parse_vertex(line, fields[1], count)?;
            edges.push((a, b));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(hline, format!("bag {} never defined", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let td = TreeDecomposition::new(bags, edges);
    if let Some(msg) = td.tree_defect() {
        return Err(Error::InvalidDecomposition(msg));
    }
    let actual = td.bags().iter().map(Vec::len).max().unwrap_or(0);
    if actual != declared {
        return Err(Error::parse(
            hline,
            format!("header declares bag size {declared} but largest bag has {actual}"),
        ));
    }
    Ok(td)
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let max_bag = td.bags().iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.node_count(), max_bag, n);
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in td.edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}
