//! Edge-list files and builtin graph names.

use std::fs;
use std::io::Write;
use std::path::Path;

use nhood_core::edgelist::{parse_edge_list, parse_pairs, write_edge_list, LabeledGraph};
use nhood_core::gen::builtin;
use nhood_core::{Edge, Graph};

use crate::error::{CliError, Result};

/// Prefix selecting a bundled graph instead of a file, e.g. `builtin:zachary`.
pub const BUILTIN_PREFIX: &str = "builtin:";

/// A loaded graph with the labels it was written with.
#[derive(Clone, Debug)]
pub struct Input {
    /// The path or `builtin:` name it came from.
    pub name: String,
    pub labeled: LabeledGraph,
}

impl Input {
    pub fn graph(&self) -> &Graph {
        &self.labeled.graph
    }

    pub fn labels(&self) -> &[u64] {
        &self.labeled.labels
    }

    pub fn label(&self, v: u32) -> u64 {
        self.labeled.labels[v as usize]
    }
}

/// Loads `builtin:NAME` or an edge-list file. Duplicate edges are collapsed
/// with a warning on stderr.
pub fn load_input(source: &str) -> Result<Input> {
    let labeled = match source.strip_prefix(BUILTIN_PREFIX) {
        Some(name) => {
            let graph = builtin(name).map_err(|e| CliError::Config(e.to_string()))?;
            let labels = (0..graph.n() as u64).collect();
            LabeledGraph {
                graph,
                labels,
                duplicates: 0,
            }
        }
        None => {
            let text = read_text(Path::new(source))?;
            parse_edge_list(&text).map_err(|e| CliError::io(source, e))?
        }
    };
    if labeled.duplicates > 0 {
        eprintln!("warning: {source}: ignored {} duplicate edge(s)", labeled.duplicates);
    }
    Ok(Input {
        name: source.to_string(),
        labeled,
    })
}

/// Reads a compressed edge list written with the labels of `original` and
/// maps it onto the original vertex set. Edges that are not edges of the
/// original graph fail with [`CliError::Verify`].
pub fn load_compressed(original: &Input, source: &str) -> Result<Graph> {
    let pairs = if let Some(name) = source.strip_prefix(BUILTIN_PREFIX) {
        let g = builtin(name).map_err(|e| CliError::Config(e.to_string()))?;
        g.edges().iter().map(|e| (e.u() as u64, e.v() as u64)).collect()
    } else {
        let text = read_text(Path::new(source))?;
        parse_pairs(&text).map_err(|e| CliError::io(source, e))?
    };
    let edges = original
        .labeled
        .resolve(&pairs)
        .map_err(|e| CliError::Verify(format!("{source}: {e}")))?;
    original
        .graph()
        .subgraph(edges)
        .map_err(|e| CliError::Verify(format!("{source}: {e}")))
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

/// Edge list text using the labels of `input`.
pub fn edge_list_text(input: &Input, edges: &[Edge]) -> String {
    write_edge_list(edges, Some(input.labels()))
}
