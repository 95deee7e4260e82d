//! The edge-list text format.
//!
//! ```text
//! graph <name> <n_vertices> <n_edges>
//! u v
//! ...
//! ```
//!
//! Vertices are 0-based, every edge is written once with `u < v`, and
//! edges are sorted lexicographically. Readers skip blank lines and
//! anything after a `#`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use drglab_core::Graph;

use crate::{Error, Result};

/// Serialize `g`. Whitespace in the name becomes `_` so the header stays
/// four fields.
pub fn to_string(g: &Graph) -> String {
    let name: String = g.name().chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect();
    let name = if name.is_empty() { "graph".to_string() } else { name };
    let mut out = format!("graph {name} {} {}\n", g.n_vertices(), g.n_edges());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or_else(|| Error::Parse { line: 0, msg: "missing header".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [tag, name, n, m] = fields[..] else {
        return Err(Error::Parse { line, msg: "header must be `graph <name> <n_vertices> <n_edges>`".into() });
    };
    if tag != "graph" {
        return Err(Error::Parse { line, msg: format!("expected `graph`, found `{tag}`") });
    }
    let n: usize = number(n, line)?;
    let m: usize = number(m, line)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let mut it = body.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse { line, msg: "edge lines hold exactly two vertex ids".into() });
        };
        let (u, v): (usize, usize) = (number(u, line)?, number(v, line)?);
        if u >= v {
            return Err(Error::Parse { line, msg: format!("edge `{u} {v}` must have u < v") });
        }
        if let Some(&prev) = edges.last() {
            if prev >= (u, v) {
                return Err(Error::Parse { line, msg: format!("edge `{u} {v}` is out of order or repeated") });
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("header promises {m} edges, found {}", edges.len()) });
    }
    Ok(Graph::from_edge_list(n, &edges)?.with_name(name))
}

fn number(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a vertex count or id") })
}

pub fn read(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), source: e })?;
    parse(&text)
}

pub fn write(path: &Path, g: &Graph) -> Result<()> {
    fs::write(path, to_string(g)).map_err(|e| Error::Io { path: path.display().to_string(), source: e })
}
