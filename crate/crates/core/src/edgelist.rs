//! Whitespace-separated edge lists.
//!
//! Lines starting with `#` (after optional whitespace) and blank lines are
//! ignored. Every other line holds two unsigned integer labels. Labels are
//! relabeled densely in ascending label order; the mapping is kept so that
//! output can use the original labels.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::graph::{Edge, Graph, VertexId};
use crate::{Error, Result};

/// A parsed edge list: the graph, the original label of every vertex, and
/// the number of duplicate edges that were collapsed.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
    pub duplicates: usize,
}

impl LabeledGraph {
    /// Maps original labels to dense ids.
    pub fn index(&self) -> BTreeMap<u64, VertexId> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as VertexId))
            .collect()
    }

    /// Translates edges written with this graph's labels into edges of
    /// `self.graph`. Unknown labels or non-edges fail with
    /// [`Error::NotSubgraph`].
    pub fn resolve(&self, pairs: &[(u64, u64)]) -> Result<Vec<Edge>> {
        let index = self.index();
        pairs
            .iter()
            .map(|&(a, b)| {
                if a == b {
                    return Err(Error::SelfLoop { vertex: a });
                }
                let not_sub = || Error::NotSubgraph { u: a.min(b), v: a.max(b) };
                let (x, y) = match (index.get(&a), index.get(&b)) {
                    (Some(&x), Some(&y)) => (x, y),
                    _ => return Err(not_sub()),
                };
                let e = Edge::new(x, y)?;
                self.graph.edge_id(e).map(|_| e).ok_or_else(not_sub)
            })
            .collect()
    }
}

/// Parses the label pairs of an edge list without building a graph.
pub fn parse_pairs(text: &str) -> Result<Vec<(u64, u64)>> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u64> {
            let tok = tok.ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected two vertex ids, found {:?}", trimmed),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("{:?} is not an unsigned integer", tok),
            })
        };
        let a = parse(fields.next())?;
        let b = parse(fields.next())?;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected two vertex ids, found {:?}", trimmed),
            });
        }
        if a == b {
            return Err(Error::SelfLoop { vertex: a });
        }
        pairs.push((a, b));
    }
    Ok(pairs)
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let pairs = parse_pairs(text)?;
    let mut index: BTreeMap<u64, VertexId> = BTreeMap::new();
    for &(a, b) in &pairs {
        index.insert(a, 0);
        index.insert(b, 0);
    }
    let labels: Vec<u64> = index.keys().copied().collect();
    for (i, id) in index.values_mut().enumerate() {
        *id = i as VertexId;
    }
    let (graph, duplicates) =
        Graph::from_edges_counting(labels.len(), pairs.iter().map(|(a, b)| (index[a], index[b])))?;
    Ok(LabeledGraph {
        graph,
        labels,
        duplicates,
    })
}

/// Writes `edges` as canonical `u v` label pairs (`u < v`), sorted ascending.
/// `labels` maps dense ids to output labels; `None` writes the ids.
pub fn write_edge_list(edges: &[Edge], labels: Option<&[u64]>) -> String {
    let label = |v: VertexId| labels.map_or(v as u64, |l| l[v as usize]);
    let mut pairs: Vec<(u64, u64)> = edges
        .iter()
        .map(|e| {
            let (a, b) = (label(e.u()), label(e.v()));
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    let mut out = String::with_capacity(pairs.len() * 8);
    for (a, b) in pairs {
        let _ = writeln!(out, "{} {}", a, b);
    }
    out
}
