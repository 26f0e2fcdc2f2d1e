//! Text formats for graphs, hypergraphs and vertex sets.
//!
//! Graphs: `p <n> <m>` followed by `e <u> <v>` lines (`c` lines are
//! comments). A `p edge <n> <m>` header is accepted as well. The plain
//! edge-list format replaces the header with `<n> <m>` and edges with
//! `<u> <v>`. Hypergraphs: `p <n> <k>` followed by `h <v1> <v2> ...`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    EdgeList,
    #[default]
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" | "dimacs-like" => Ok(GraphFormat::Dimacs),
            _ => Err(format!("unknown graph format '{s}'")),
        }
    }
}

/// Label base of vertex ids in files. Internally everything is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Base {
    #[default]
    Zero,
    One,
}

impl Base {
    fn offset(self) -> usize {
        match self {
            Base::Zero => 0,
            Base::One => 1,
        }
    }

    fn to_internal(self, line: usize, raw: usize, n: usize) -> Result<usize> {
        let off = self.offset();
        if raw < off || raw - off >= n {
            return Err(Error::VertexOutOfRange {
                line,
                vertex: raw,
                n,
            });
        }
        Ok(raw - off)
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(&t) if t == "c" || t.starts_with('#') || t.starts_with('%') => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found '{tok}'")))
}

fn parse_header(line: usize, toks: &[&str], tag: bool) -> Result<(usize, usize)> {
    let mut rest = toks;
    if tag {
        if rest.first() != Some(&"p") {
            return Err(Error::parse(line, "expected header line 'p <n> <m>'"));
        }
        rest = &rest[1..];
        if rest.len() == 3 && rest[0].parse::<usize>().is_err() {
            rest = &rest[1..];
        }
    }
    if rest.len() != 2 {
        return Err(Error::parse(line, "header needs exactly two counts"));
    }
    Ok((number(line, rest[0])?, number(line, rest[1])?))
}

pub fn parse_graph(text: &str, format: GraphFormat, base: Base) -> Result<Graph> {
    let tagged = format == GraphFormat::Dimacs;
    let mut lines = significant_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing header line"))?;
    let (n, m) = parse_header(hl, &header, tagged)?;
    let mut edges = Vec::with_capacity(m);
    for (line, toks) in lines {
        let body = if tagged {
            if toks[0] != "e" {
                return Err(Error::parse(line, format!("unexpected record '{}'", toks[0])));
            }
            &toks[1..]
        } else {
            &toks[..]
        };
        if body.len() != 2 {
            return Err(Error::parse(line, "edge needs exactly two endpoints"));
        }
        let u = base.to_internal(line, number(line, body[0])?, n)?;
        let v = base.to_internal(line, number(line, body[1])?, n)?;
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            hl,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn serialize_graph(g: &Graph, format: GraphFormat, base: Base) -> String {
    let off = base.offset();
    let mut s = String::new();
    match format {
        GraphFormat::Dimacs => writeln!(s, "p {} {}", g.n(), g.edge_count()),
        GraphFormat::EdgeList => writeln!(s, "{} {}", g.n(), g.edge_count()),
    }
    .unwrap();
    for (u, v) in g.edges() {
        match format {
            GraphFormat::Dimacs => writeln!(s, "e {} {}", u + off, v + off),
            GraphFormat::EdgeList => writeln!(s, "{} {}", u + off, v + off),
        }
        .unwrap();
    }
    s
}

pub fn parse_hypergraph(text: &str, base: Base) -> Result<Hypergraph> {
    let mut lines = significant_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing header line"))?;
    let (n, k) = parse_header(hl, &header, true)?;
    let mut edges = Vec::with_capacity(k);
    for (line, toks) in lines {
        if toks[0] != "h" {
            return Err(Error::parse(line, format!("unexpected record '{}'", toks[0])));
        }
        if toks.len() == 1 {
            return Err(Error::EmptyHyperedge(edges.len()));
        }
        let mut e = Vec::with_capacity(toks.len() - 1);
        for t in &toks[1..] {
            e.push(base.to_internal(line, number(line, t)?, n)?);
        }
        edges.push(e);
    }
    if edges.len() != k {
        return Err(Error::parse(
            hl,
            format!("header declares {k} hyperedges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

pub fn serialize_hypergraph(h: &Hypergraph, base: Base) -> String {
    let off = base.offset();
    let mut s = format!("p {} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        s.push('h');
        for v in e {
            write!(s, " {}", v + off).unwrap();
        }
        s.push('\n');
    }
    s
}

/// Vertex set files: whitespace-separated vertex ids, `c`/`#` comments.
pub fn parse_vertex_set(text: &str, n: usize, base: Base) -> Result<VertexSet> {
    let mut s = VertexSet::new(n);
    for (line, toks) in significant_lines(text) {
        for t in toks {
            s.insert(base.to_internal(line, number(line, t)?, n)?);
        }
    }
    Ok(s)
}

pub fn serialize_vertex_set(s: &VertexSet, base: Base) -> String {
    let off = base.offset();
    let items: Vec<String> = s.iter().map(|v| (v + off).to_string()).collect();
    format!("{}\n", items.join(" "))
}
