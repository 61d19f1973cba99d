//! File formats: configuration JSON, graph JSON, matrix CSV, and DOT output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{
    BrauerConfiguration, ConfigVertex, Configuration, OccurrenceRef, Polygon, ValidateOptions,
    ValidationErrors,
};
use crate::quiver::Quiver;
use crate::rad3::{Graph, GraphError, SymMatrix};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("bad occurrence reference {0:?}")]
    BadOccurrence(String),
    #[error("bad matrix entry {text:?} in row {row}")]
    BadMatrixEntry { row: usize, text: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Invalid(#[from] ValidationErrors),
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn one() -> u32 {
    1
}

#[derive(Serialize, Deserialize)]
struct FileVertex {
    name: String,
    #[serde(default = "one")]
    multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
struct FileConfig {
    vertices: Vec<FileVertex>,
    polygons: Vec<Polygon>,
    #[serde(default)]
    orientation: BTreeMap<String, Vec<String>>,
}

/// Parses `"LABEL"` or `"LABEL#k"`.
pub fn parse_occurrence(s: &str) -> Result<OccurrenceRef, ParseError> {
    match s.rsplit_once('#') {
        None if !s.is_empty() => Ok(OccurrenceRef::new(s, 1)),
        Some((label, k)) if !label.is_empty() => match k.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(OccurrenceRef::new(label, k)),
            _ => Err(ParseError::BadOccurrence(s.to_string())),
        },
        _ => Err(ParseError::BadOccurrence(s.to_string())),
    }
}

pub fn parse_configuration(text: &str) -> Result<BrauerConfiguration, ParseError> {
    let file: FileConfig = serde_json::from_str(text)?;
    let mut orientation = BTreeMap::new();
    for (v, refs) in file.orientation {
        let refs = refs
            .iter()
            .map(|r| parse_occurrence(r))
            .collect::<Result<Vec<_>, _>>()?;
        orientation.insert(v, refs);
    }
    Ok(BrauerConfiguration {
        vertices: file
            .vertices
            .into_iter()
            .map(|v| ConfigVertex {
                name: v.name,
                multiplicity: v.multiplicity,
            })
            .collect(),
        polygons: file.polygons,
        orientation,
    })
}

/// Parses and validates in one step.
pub fn load_configuration(text: &str, opts: ValidateOptions) -> Result<Configuration, ParseError> {
    Ok(parse_configuration(text)?.validate(opts)?)
}

pub fn serialize_configuration(cfg: &BrauerConfiguration) -> String {
    let file = FileConfig {
        vertices: cfg
            .vertices
            .iter()
            .map(|v| FileVertex {
                name: v.name.clone(),
                multiplicity: v.multiplicity,
            })
            .collect(),
        polygons: cfg.polygons.clone(),
        orientation: cfg
            .orientation
            .iter()
            .map(|(k, v)| (k.clone(), v.iter().map(|r| r.to_string()).collect()))
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("configuration serializes")
}

#[derive(Serialize, Deserialize)]
struct FileGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let g: FileGraph = serde_json::from_str(text)?;
    Ok(Graph::new(
        g.n,
        g.edges.into_iter().map(|[i, j]| (i, j)).collect(),
    )?)
}

pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(FileGraph {
        n: g.n,
        edges: g.edges.iter().map(|&(i, j)| [i, j]).collect(),
    })
    .expect("graph serializes")
}

/// Comma-separated rows of non-negative integers; blank lines are skipped.
pub fn parse_matrix_csv(text: &str) -> Result<SymMatrix, ParseError> {
    let mut rows = Vec::new();
    for (r, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| ParseError::BadMatrixEntry {
                        row: r + 1,
                        text: t.trim().to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(SymMatrix::new(rows)?)
}

pub fn matrix_to_csv(m: &SymMatrix) -> String {
    let mut out = String::new();
    for r in &m.rows {
        let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT digraph; edges in arrow order, labeled `alias (α, i)`.
pub fn emit_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph Q {\n");
    for v in 0..q.vertex_count() {
        let _ = writeln!(out, "  v{v} [label=\"{}\"];", dot_escape(q.label(v)));
    }
    for a in q.arrows() {
        let origin = match a.id.rsplit_once(':') {
            Some((alpha, i)) => format!("({alpha}, {i})"),
            None => a.id.clone(),
        };
        let _ = writeln!(
            out,
            "  v{} -> v{} [label=\"{} {}\"];",
            a.source,
            a.target,
            dot_escape(&a.alias),
            dot_escape(&origin)
        );
    }
    out.push_str("}\n");
    out
}
