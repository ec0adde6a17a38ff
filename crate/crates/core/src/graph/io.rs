//! Text formats.
//!
//! Undirected (DIMACS-like):
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>          (m lines, 1-based)
//! ```
//!
//! Oriented: header `p oriented <n> <m>` and `a <u> <v>` lines for arcs `u -> v`.
//!
//! Colouring witness: `s chi <k>` then one `v <vertex> <colour>` line per
//! vertex (1-based vertex, 0-based colour).
//!
//! Writers emit edges and arcs in lexicographic order, so `parse(write(g)) == g`
//! and `write(parse(text)) == text` for canonical text.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{OrientedGraph, UndirectedGraph};
use crate::chromatic::Colouring;
use crate::error::{Error, Result};

/// Either kind of graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Undirected(UndirectedGraph),
    Oriented(OrientedGraph),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Edge,
    Oriented,
}

struct Header {
    kind: Kind,
    n: usize,
    m: usize,
}

/// Content lines with their 1-based line numbers, comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn number(line: usize, field: &str, what: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("{what} '{field}' is not a non-negative integer")))
}

fn vertex(line: usize, field: &str, n: usize) -> Result<usize> {
    let v = number(line, field, "vertex")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn parse_pairs(text: &str) -> Result<(Header, Vec<(usize, usize)>)> {
    let mut header: Option<Header> = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for (line, fields) in content_lines(text) {
        last_line = line;
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "second problem line"));
                }
                if fields.len() != 4 {
                    return Err(Error::parse(line, "expected 'p <edge|oriented> <n> <m>'"));
                }
                let kind = match fields[1] {
                    "edge" => Kind::Edge,
                    "oriented" => Kind::Oriented,
                    other => return Err(Error::parse(line, format!("unknown format '{other}'"))),
                };
                let n = number(line, fields[2], "vertex count")?;
                if n == 0 {
                    return Err(Error::parse(line, "vertex count must be at least 1"));
                }
                let m = number(line, fields[3], "edge count")?;
                header = Some(Header { kind, n, m });
            }
            tag @ ("e" | "a") => {
                let Some(h) = &header else {
                    return Err(Error::parse(line, "edge line before problem line"));
                };
                let expected = if h.kind == Kind::Edge { "e" } else { "a" };
                if tag != expected {
                    return Err(Error::parse(line, format!("'{tag}' line in a '{expected}' file")));
                }
                if fields.len() != 3 {
                    return Err(Error::parse(line, format!("expected '{tag} <u> <v>'")));
                }
                let u = vertex(line, fields[1], h.n)?;
                let v = vertex(line, fields[2], h.n)?;
                pairs.push((line, (u, v)));
            }
            other => return Err(Error::parse(line, format!("unknown line type '{other}'"))),
        }
    }
    let header = header.ok_or_else(|| Error::parse(last_line.max(1), "missing problem line"))?;
    if pairs.len() != header.m {
        return Err(Error::parse(
            last_line.max(1),
            format!("header declares {} edges, found {}", header.m, pairs.len()),
        ));
    }
    let mut seen = HashSet::with_capacity(pairs.len());
    let mut checked = Vec::with_capacity(pairs.len());
    for (line, (u, v)) in pairs {
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
        }
        let clash = match header.kind {
            Kind::Edge => (!seen.insert((u.min(v), u.max(v))))
                .then(|| format!("duplicate edge ({}, {})", u + 1, v + 1)),
            Kind::Oriented => {
                if seen.contains(&(v, u)) {
                    Some(format!("antiparallel arcs {0} -> {1} and {1} -> {0}", v + 1, u + 1))
                } else if !seen.insert((u, v)) {
                    Some(format!("duplicate arc {} -> {}", u + 1, v + 1))
                } else {
                    None
                }
            }
        };
        if let Some(message) = clash {
            return Err(Error::parse(line, message));
        }
        checked.push((u, v));
    }
    Ok((header, checked))
}

/// Parses either format, dispatching on the problem line.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let (header, pairs) = parse_pairs(text)?;
    Ok(match header.kind {
        Kind::Edge => GraphFile::Undirected(UndirectedGraph::new(header.n, &pairs)?),
        Kind::Oriented => GraphFile::Oriented(OrientedGraph::new(header.n, &pairs)?),
    })
}

pub fn parse_undirected(text: &str) -> Result<UndirectedGraph> {
    match parse_graph(text)? {
        GraphFile::Undirected(g) => Ok(g),
        GraphFile::Oriented(_) => Err(Error::parse(1, "expected an undirected 'p edge' file")),
    }
}

pub fn parse_oriented(text: &str) -> Result<OrientedGraph> {
    match parse_graph(text)? {
        GraphFile::Oriented(d) => Ok(d),
        GraphFile::Undirected(_) => Err(Error::parse(1, "expected a 'p oriented' file")),
    }
}

pub fn write_undirected(g: &UndirectedGraph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn write_oriented(d: &OrientedGraph) -> String {
    let mut s = format!("p oriented {} {}\n", d.n(), d.m());
    for &(u, v) in d.arcs() {
        let _ = writeln!(s, "a {} {}", u + 1, v + 1);
    }
    s
}

pub fn write_graph(file: &GraphFile) -> String {
    match file {
        GraphFile::Undirected(g) => write_undirected(g),
        GraphFile::Oriented(d) => write_oriented(d),
    }
}

pub fn write_colouring(c: &Colouring) -> String {
    let mut s = format!("s chi {}\n", c.num_colours());
    for (v, &col) in c.assignment().iter().enumerate() {
        let _ = writeln!(s, "v {} {}", v + 1, col);
    }
    s
}

pub fn parse_colouring(text: &str) -> Result<Colouring> {
    let mut declared: Option<usize> = None;
    let mut entries: Vec<Option<usize>> = Vec::new();
    let mut last_line = 1;
    for (line, fields) in content_lines(text) {
        last_line = line;
        match (fields.as_slice(), declared) {
            (["s", "chi", k], None) => declared = Some(number(line, k, "colour count")?),
            (["v", v, c], Some(_)) => {
                let v = number(line, v, "vertex")?;
                if v == 0 {
                    return Err(Error::parse(line, "vertices are 1-based"));
                }
                if entries.len() < v {
                    entries.resize(v, None);
                }
                if entries[v - 1].replace(number(line, c, "colour")?).is_some() {
                    return Err(Error::parse(line, format!("vertex {v} coloured twice")));
                }
            }
            _ => return Err(Error::parse(line, format!("malformed line '{}'", fields.join(" ")))),
        }
    }
    let k = declared.ok_or_else(|| Error::parse(last_line, "missing 's chi <k>' line"))?;
    let assignment = entries
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| Error::parse(last_line, format!("vertex {} has no colour", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let c = Colouring::new(assignment).map_err(|e| Error::parse(last_line, e.to_string()))?;
    if c.num_colours() != k {
        return Err(Error::parse(
            last_line,
            format!("declared {k} colours, assignment uses {}", c.num_colours()),
        ));
    }
    Ok(c)
}
