//! The incremental edge-scan compressor and the `(p,t)` verifier.
//!
//! The scan replays the edges in the given order into a reference graph `G'`.
//! After each insertion it checks both endpoints against the compressed graph
//! built so far: if some level `i` reaches fewer than `p(i)·|N¹_G'(x)|` of the
//! endpoint's reference neighbors, the edge is kept. The final kept set is a
//! valid compression of the whole graph, because every later insertion of an
//! edge at a vertex is re-checked and, when needed, kept.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Adjacency, Bfs, Edge, Graph, GrowingGraph, VertexId};
use crate::ordering::{EdgeOrdering, OrderingKind};
use crate::{Error, ProportionFunction, Ratio, Result};

/// Kept edges of a compression plus the parameters that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct CompressionResult {
    /// Kept edges in ascending canonical order.
    pub kept: Vec<Edge>,
    /// `|V|` of the source graph (and of the compressed graph).
    pub n: usize,
    /// `|E|` of the source graph.
    pub m: usize,
    pub pf: ProportionFunction,
    pub ordering: OrderingKind,
    pub seed: Option<u64>,
    /// Wall time in seconds. Zero unless a timing driver filled it in.
    pub seconds: f64,
}

impl CompressionResult {
    pub fn kept_count(&self) -> usize {
        self.kept.len()
    }

    /// The compressed graph on the original vertex set.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.kept.iter().map(|e| e.endpoints()))
            .expect("kept edges come from a simple graph")
    }
}

/// Cumulative count of `base` neighbors reached within each level `1..=t`
/// from `v` in `gc`; `reached[i]` holds level `i`, index 0 is unused.
fn reached_per_level<A: Adjacency + ?Sized>(
    bfs: &mut Bfs,
    v: VertexId,
    base: &[VertexId],
    gc: &A,
    t: usize,
    reached: &mut Vec<usize>,
) {
    reached.clear();
    reached.resize(t + 1, 0);
    if base.is_empty() {
        return;
    }
    bfs.run(gc, v, Some(t as u32));
    for &w in base {
        if let Some(d) = bfs.distance(w) {
            if d >= 1 {
                reached[d as usize] += 1;
            }
        }
    }
    for i in 1..=t {
        reached[i] += reached[i - 1];
    }
}

fn node_holds<A: Adjacency + ?Sized>(
    bfs: &mut Bfs,
    v: VertexId,
    base: &[VertexId],
    gc: &A,
    pf: &ProportionFunction,
    reached: &mut Vec<usize>,
) -> bool {
    reached_per_level(bfs, v, base, gc, pf.t(), reached);
    (1..=pf.t()).all(|i| pf.satisfied(i, reached[i], base.len()))
}

/// Whether every level `i` in `1..=t` reaches at least `p(i)·|base|` of
/// `base_neighbors` from `v` within `i` hops of `gc`.
pub fn check_node<A: Adjacency + ?Sized>(
    v: VertexId,
    base_neighbors: &[VertexId],
    gc: &A,
    pf: &ProportionFunction,
) -> bool {
    let mut bfs = Bfs::new(gc.vertex_count());
    let mut reached = Vec::new();
    node_holds(&mut bfs, v, base_neighbors, gc, pf, &mut reached)
}

/// Reusable state for repeated scans over the same graph.
pub(crate) struct Scanner {
    reference: GrowingGraph,
    compressed: GrowingGraph,
    bfs: Bfs,
    reached: Vec<usize>,
}

impl Scanner {
    pub(crate) fn new(n: usize) -> Self {
        Scanner {
            reference: GrowingGraph::new(n),
            compressed: GrowingGraph::new(n),
            bfs: Bfs::new(n),
            reached: Vec::new(),
        }
    }

    /// Runs the scan over `order` and calls `keep` for every kept edge.
    /// Returns the number of kept edges.
    pub(crate) fn scan<I, F>(&mut self, pf: &ProportionFunction, order: I, mut keep: F) -> usize
    where
        I: IntoIterator<Item = Edge>,
        F: FnMut(Edge),
    {
        self.reference.clear();
        self.compressed.clear();
        for e in order {
            self.reference.add_edge(e);
            let (u, v) = e.endpoints();
            let insert = !node_holds(
                &mut self.bfs,
                u,
                self.reference.neighbors(u),
                &self.compressed,
                pf,
                &mut self.reached,
            ) || !node_holds(
                &mut self.bfs,
                v,
                self.reference.neighbors(v),
                &self.compressed,
                pf,
                &mut self.reached,
            );
            if insert {
                self.compressed.add_edge(e);
                keep(e);
            }
        }
        self.compressed.m()
    }
}

/// Checks that `order` lists every edge of `g` exactly once.
pub(crate) fn check_permutation(g: &Graph, order: &[Edge]) -> Result<()> {
    if order.len() != g.m() {
        return Err(Error::InvalidOrdering(alloc::format!(
            "{} edges listed, graph has {}",
            order.len(),
            g.m()
        )));
    }
    let mut seen = vec![false; g.m()];
    for &e in order {
        match g.edge_id(e) {
            None => {
                return Err(Error::InvalidOrdering(alloc::format!("{:?} is not an edge", e)));
            }
            Some(id) if seen[id] => {
                return Err(Error::InvalidOrdering(alloc::format!("{:?} listed twice", e)));
            }
            Some(id) => seen[id] = true,
        }
    }
    Ok(())
}

/// Compresses `g` by scanning its edges in `order`.
pub fn compress_basic(
    g: &Graph,
    pf: &ProportionFunction,
    order: &EdgeOrdering,
) -> Result<CompressionResult> {
    check_permutation(g, order.edges())?;
    let mut kept = Vec::new();
    Scanner::new(g.n()).scan(pf, order.edges().iter().copied(), |e| kept.push(e));
    kept.sort_unstable();
    Ok(CompressionResult {
        kept,
        n: g.n(),
        m: g.m(),
        pf: pf.clone(),
        ordering: order.kind(),
        seed: order.seed(),
        seconds: 0.0,
    })
}

/// A vertex and hop level where the compressed graph reaches too few of the
/// vertex's original neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: VertexId,
    pub level: usize,
    /// `p(level)·deg_G(vertex)`.
    pub required: Ratio,
    pub achieved: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `gc` is a `(p,t)`-compression of `g`. Every failing
/// (vertex, level) pair is reported.
pub fn verify(g: &Graph, gc: &Graph, pf: &ProportionFunction) -> Result<VerificationReport> {
    if gc.n() != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            found: gc.n(),
        });
    }
    if let Some(e) = gc.edges().iter().find(|&&e| g.edge_id(e).is_none()) {
        return Err(Error::NotSubgraph {
            u: e.u() as u64,
            v: e.v() as u64,
        });
    }
    let mut bfs = Bfs::new(g.n());
    let mut reached = Vec::new();
    let mut report = VerificationReport::default();
    for v in 0..g.n() as VertexId {
        let base = g.neighbors(v);
        reached_per_level(&mut bfs, v, base, gc, pf.t(), &mut reached);
        for (level, &count) in reached.iter().enumerate().take(pf.t() + 1).skip(1) {
            if !pf.satisfied(level, count, base.len()) {
                report.violations.push(Violation {
                    vertex: v,
                    level,
                    required: pf.threshold(level, base.len()),
                    achieved: count,
                });
            }
        }
    }
    Ok(report)
}
