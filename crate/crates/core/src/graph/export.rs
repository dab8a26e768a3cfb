use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Edges,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "edges" => Ok(Format::Edges),
            "json" => Ok(Format::Json),
            other => Err(Error::Precondition(format!("unknown graph format '{other}'"))),
        }
    }
}

#[derive(Serialize)]
struct GraphJson<'a> {
    family: &'a str,
    q: usize,
    connection: Option<Vec<u32>>,
    edges: Vec<[usize; 2]>,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic text rendering. Edge lists carry no trailing newline and an
/// empty graph renders as the empty string.
pub fn export(g: &Graph, format: Format) -> String {
    match format {
        Format::Edges => g
            .edges()
            .map(|(u, v)| format!("{u} {v}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Dot => {
            let names: Vec<String> = (0..g.order()).map(|u| dot_escape(&g.vertex_name(u))).collect();
            let mut out = format!("graph \"{}\" {{\n", dot_escape(g.label()));
            for name in &names {
                writeln!(out, "  \"{name}\";").unwrap();
            }
            for (u, v) in g.edges() {
                writeln!(out, "  \"{}\" -- \"{}\";", names[u], names[v]).unwrap();
            }
            out.push_str("}\n");
            out
        }
        Format::Json => {
            let doc = GraphJson {
                family: g.label(),
                q: g.order(),
                connection: g.cayley().map(|c| c.connection.indices()),
                edges: g.edges().map(|(u, v)| [u, v]).collect(),
            };
            serde_json::to_string(&doc).expect("graph JSON is always serializable")
        }
    }
}

/// Reads `u v` lines (blank lines ignored) into a graph on `order` vertices.
pub fn parse_edge_list(text: &str, order: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            let [u, v] = parts.as_slice() else {
                return Err(Error::parse(offset, "expected two vertex indices"));
            };
            let u: usize = u.parse().map_err(|_| Error::parse(offset, "bad vertex index"))?;
            let v: usize = v.parse().map_err(|_| Error::parse(offset, "bad vertex index"))?;
            edges.push((u, v));
        }
        offset += line.len() + 1;
    }
    Graph::from_edges(order, edges, "edge-list")
}
