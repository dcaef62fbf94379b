//! Graph files and result emission.
//!
//! Edge lists start with `n m` followed by `m` lines `u v` (0-based).
//! DIMACS files carry a `p <kind> n m` line and arcs `a u v` (1-based).
//! Blank lines and comments (`#` in edge lists, `c` in DIMACS) are skipped.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::components::ComponentSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::Parse { line: 0, message: format!("unknown graph format `{other}`") }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Parse { line: 0, message: format!("unknown output format `{other}`") }),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
        })
    }
}

pub fn parse_graph(path: impl AsRef<Path>, format: Format) -> Result<Graph> {
    parse_str(&std::fs::read_to_string(path)?, format)
}

pub fn parse_str(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(err(line, format!("expected {N} fields, found {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| err(line, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Builds the graph edge by edge so rejections carry their line number.
struct Builder {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    seen: std::collections::HashSet<(VertexId, VertexId)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, edges: Vec::new(), seen: Default::default() }
    }

    fn add(&mut self, line: usize, u: VertexId, v: VertexId) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(err(line, format!("vertex {x} out of range for {} vertices", self.n)));
            }
        }
        if u == v {
            return Err(err(line, format!("self-loop on vertex {u}")));
        }
        if !self.seen.insert((u, v)) {
            return Err(err(line, format!("duplicate edge ({u}, {v})")));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, line: usize, declared: usize) -> Result<Graph> {
        if self.edges.len() != declared {
            return Err(err(line, format!("header declares {declared} edges, found {}", self.edges.len())));
        }
        Graph::new(self.n, self.edges)
    }
}

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut header: Option<(Builder, usize)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [a, b] = numbers::<2>(line, &fields)?;
        match &mut header {
            None => header = Some((Builder::new(a), b)),
            Some((builder, _)) => builder.add(line, a, b)?,
        }
    }
    let (builder, m) = header.ok_or_else(|| err(last, "missing `n m` header"))?;
    builder.finish(last, m)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(Builder, usize)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second problem line"));
                }
                if fields.len() != 4 {
                    return Err(err(line, "problem line must be `p <kind> n m`"));
                }
                let [n, m] = numbers::<2>(line, &fields[2..])?;
                header = Some((Builder::new(n), m));
            }
            Some("a") => {
                let (builder, _) = header.as_mut().ok_or_else(|| err(line, "arc before problem line"))?;
                // Optional weights after the endpoints are ignored.
                if fields.len() < 3 {
                    return Err(err(line, "arc line must be `a u v`"));
                }
                let [u, v] = numbers::<2>(line, &fields[1..3])?;
                if u == 0 || v == 0 {
                    return Err(err(line, "DIMACS vertices are 1-based"));
                }
                builder.add(line, u - 1, v - 1)?;
            }
            Some(other) => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (builder, m) = header.ok_or_else(|| err(last, "missing problem line"))?;
    builder.finish(last, m)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn emit_components(cs: &ComponentSet, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => cs.to_text(),
        OutputFormat::Json => {
            let mut s = cs.to_json();
            s.push('\n');
            s
        }
    }
}
