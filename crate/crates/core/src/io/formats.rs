//! DIMACS and edge-list graph files, and two-column coloring files.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// `p edge n m` header and `e u v` lines, 1-indexed.
    Dimacs,
    /// Order on the first line, then `u v` pairs, 0-indexed.
    Edgelist,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edgelist" | "edges" => Ok(GraphFormat::Edgelist),
            other => Err(Error::InvalidParameter(format!("unknown graph format `{other}`"))),
        }
    }
}

impl GraphFormat {
    /// Guess from the file extension: `.col` and `.dimacs` are DIMACS,
    /// anything else is an edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::Edgelist,
        }
    }
}

/// A parsed graph and the number of repeated edge lines that were collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number<T: FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))
}

fn assemble(order: usize, edges: Vec<(usize, Vertex, Vertex)>) -> Result<Parsed> {
    let mut seen = std::collections::HashSet::new();
    let mut duplicate_edges = 0;
    for &(line, u, v) in &edges {
        if u >= order || v >= order {
            return Err(parse_err(line, format!("vertex out of range for order {order}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            duplicate_edges += 1;
        }
    }
    let pairs: Vec<_> = edges.into_iter().map(|(_, u, v)| (u, v)).collect();
    Ok(Parsed {
        graph: Graph::new(order, &pairs)?,
        duplicate_edges,
    })
}

/// Strict DIMACS: the number of `e` lines must equal the declared `m`.
pub fn parse_dimacs(text: &str) -> Result<Parsed> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => return Err(parse_err(line, format!("expected `p edge`, found {other:?}"))),
                }
                let n = number(tokens.next(), line, "vertex count")?;
                let m = number(tokens.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u: usize = number(tokens.next(), line, "endpoint")?;
                let v: usize = number(tokens.next(), line, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line, format!("edge ({u}, {v}) outside 1..={n}")));
                }
                edges.push((line, u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(
            last,
            format!("problem line declares {m} edges, found {}", edges.len()),
        ));
    }
    assemble(n, edges)
}

pub fn parse_edgelist(text: &str) -> Result<Parsed> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(first) = tokens.next() else { continue };
        match order {
            None => {
                order = Some(number(Some(first), line, "vertex count")?);
                if tokens.next().is_some() {
                    return Err(parse_err(line, "vertex count line has extra tokens"));
                }
            }
            Some(_) => {
                let u = number(Some(first), line, "endpoint")?;
                let v = number(tokens.next(), line, "endpoint")?;
                if tokens.next().is_some() {
                    return Err(parse_err(line, "edge line has extra tokens"));
                }
                edges.push((line, u, v));
            }
        }
    }
    let n = order.ok_or_else(|| parse_err(last, "missing vertex count"))?;
    assemble(n, edges)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Parsed> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::Edgelist => parse_edgelist(text),
    }
}

pub fn parse_graph_file(path: &Path, format: GraphFormat) -> Result<Parsed> {
    parse_graph(&std::fs::read_to_string(path)?, format)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dimacs => write_dimacs(g),
        GraphFormat::Edgelist => write_edgelist(g),
    }
}

/// Reads `vertex color` lines (0-indexed vertices, `#` comments). Every
/// vertex of a graph of the given order must appear exactly once; the
/// palette is the largest color.
pub fn parse_coloring(text: &str, order: usize) -> Result<Coloring> {
    let mut colors: Vec<Option<Color>> = vec![None; order];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(first) = tokens.next() else { continue };
        let v: usize = number(Some(first), line, "vertex")?;
        let c: Color = number(tokens.next(), line, "color")?;
        if v >= order {
            return Err(parse_err(line, format!("vertex {v} outside 0..{order}")));
        }
        if c == 0 {
            return Err(parse_err(line, "colors start at 1"));
        }
        if colors[v].replace(c).is_some() {
            return Err(parse_err(line, format!("vertex {v} colored twice")));
        }
    }
    if let Some(v) = colors.iter().position(Option::is_none) {
        return Err(Error::InvalidColoring(format!("vertex {v} has no color")));
    }
    Coloring::from_colors(colors.into_iter().map(|c| c.unwrap()).collect())
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, color) in c.colors().iter().enumerate() {
        writeln!(out, "{v} {color}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_examples() {
        let p = parse_dimacs("c tiny\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(p.graph, Graph::path(3));
        let err = parse_dimacs("p edge 3 2\ne 1 2\ne 1 4\n").unwrap_err();
        assert_eq!(err, parse_err(3, "edge (1, 4) outside 1..=3"));
        assert!(matches!(parse_dimacs("p edge 3 3\ne 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn duplicates_counted() {
        let p = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(p.graph.size(), 2);
        assert_eq!(p.duplicate_edges, 1);
    }

    #[test]
    fn edgelist_examples() {
        let p = parse_edgelist("# path\n4\n0 1\n1 2 # middle\n2 3\n").unwrap();
        assert_eq!(p.graph, Graph::path(4));
        assert!(matches!(parse_edgelist("3\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edgelist("3\n1 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn round_trips() {
        let g = Graph::cycle(5).join(&Graph::empty(2));
        for f in [GraphFormat::Dimacs, GraphFormat::Edgelist] {
            assert_eq!(parse_graph(&write_graph(&g, f), f).unwrap().graph, g);
        }
        let c = Coloring::from_colors(vec![2, 1, 3]).unwrap();
        assert_eq!(parse_coloring(&write_coloring(&c), 3).unwrap(), c);
    }

    #[test]
    fn coloring_file_errors() {
        assert!(parse_coloring("0 1\n", 2).is_err());
        assert!(parse_coloring("0 1\n0 2\n1 1\n", 2).is_err());
        assert!(parse_coloring("0 0\n", 1).is_err());
    }
}
