use std::fs;
use std::io::{self, Read};
use std::path::Path;

use clap::ValueEnum;
use listdist::{encode_graph6, parse_edge_list, parse_graph6, Error, Graph, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

/// Reads a file, or stdin when the path is absent or `-`.
pub fn read_source(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

/// Parses exactly one graph. graph6 input must be a single non-empty line.
pub fn parse_single(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Edges => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
            if lines.next().is_some() {
                return Err(Error::InvalidInput("expected a single graph6 line".into()));
            }
            parse_graph6(first.trim())
        }
    }
}

/// Serialized graph header shared by the reports.
#[derive(Clone, Debug, Serialize)]
pub struct GraphInfo {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
}

impl GraphInfo {
    pub fn of(g: &Graph) -> Self {
        GraphInfo {
            name: g.name().map(str::to_owned),
            n: g.order(),
            edges: g.size(),
            graph6: encode_graph6(g),
        }
    }
}
