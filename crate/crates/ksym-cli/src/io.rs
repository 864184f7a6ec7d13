//! Graph file reading/writing with format auto-detection.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use ksym_core::{emit_graph6, parse_graph6, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Decide from the content: a 0/1 matrix parses as matrix, anything else
    /// as graph6.
    Auto,
    Graph6,
    Matrix,
}

impl GraphFormat {
    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::Auto => "auto",
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Matrix => "matrix",
        }
    }
}

fn looks_like_matrix(text: &str) -> bool {
    // graph6 lines never contain whitespace or bytes below '?', so any line of
    // digits and spaces is matrix intent even when the entries are invalid
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.chars().all(|c| c.is_ascii_digit() || c.is_whitespace()))
}

/// Reads one graph from `path` in the requested format.
pub fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_graph_text(&text, format).with_context(|| format!("cannot parse {}", path.display()))
}

/// Parses graph text in the requested format, auto-detecting when asked.
pub fn parse_graph_text(text: &str, format: GraphFormat) -> Result<Graph> {
    let format = match format {
        GraphFormat::Auto => {
            if looks_like_matrix(text) {
                GraphFormat::Matrix
            } else {
                GraphFormat::Graph6
            }
        }
        other => other,
    };
    match format {
        GraphFormat::Matrix => Ok(Graph::from_adjacency_text(text)?),
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            Ok(parse_graph6(line)?)
        }
        GraphFormat::Auto => unreachable!("resolved above"),
    }
}

/// Renders a graph in the requested concrete format (`Auto` means graph6).
pub fn render_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Matrix => Ok(g.to_adjacency_text()),
        GraphFormat::Graph6 | GraphFormat::Auto => Ok(format!("{}\n", emit_graph6(g))),
    }
}

/// Fails when the two text forms describe different labeled graphs.
pub fn ensure_lossless(original: &Graph, rendered: &str, format: GraphFormat) -> Result<()> {
    let back = parse_graph_text(rendered, format)?;
    if &back != original {
        bail!("conversion would not round-trip losslessly");
    }
    Ok(())
}
