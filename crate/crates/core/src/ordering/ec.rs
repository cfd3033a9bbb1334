//! Edge-connectivity scores: a relaxed local edge betweenness.
//!
//! `s(e)` counts, over every edge `(u, v)` of the graph, the simple paths of
//! length at most `t` from `u` to `v` that run through `e`. Edges carrying many
//! short detours are scanned first.

use alloc::vec;
use alloc::vec::Vec;

use super::{EdgeOrdering, OrderingKind};
use crate::graph::{for_each_simple_path, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeScore {
    scores: Vec<u64>,
}

impl EdgeScore {
    /// Score of edge id `id`.
    pub fn by_id(&self, id: usize) -> u64 {
        self.scores[id]
    }

    pub fn get(&self, g: &Graph, e: Edge) -> Option<u64> {
        g.edge_id(e).map(|id| self.scores[id])
    }

    /// Scores indexed by edge id.
    pub fn as_slice(&self) -> &[u64] {
        &self.scores
    }

    pub fn total(&self) -> u64 {
        self.scores.iter().sum()
    }
}

pub fn ec_scores(g: &Graph, t: usize) -> EdgeScore {
    assert!(t >= 1, "path length bound must be positive");
    let mut scores = vec![0u64; g.m()];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        for_each_simple_path(g, u, v, t, |path| {
            for w in path.windows(2) {
                let id = g.edge_between(w[0], w[1]).expect("path follows graph edges");
                scores[id] += 1;
            }
        });
    }
    EdgeScore { scores }
}

/// Edges by descending score; ties by ascending canonical edge.
pub fn ec_order(g: &Graph, t: usize) -> EdgeOrdering {
    let scores = ec_scores(g, t);
    let mut ids: Vec<usize> = (0..g.m()).collect();
    // Edge ids follow canonical order, so a stable sort keeps ties canonical.
    ids.sort_by_key(|&id| core::cmp::Reverse(scores.by_id(id)));
    EdgeOrdering::new(ids.into_iter().map(|id| g.edge(id)).collect(), OrderingKind::Ec, None)
}
