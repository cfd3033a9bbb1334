//! Simple undirected graphs, bounded BFS and bounded simple-path enumeration.
//!
//! Vertices are dense ids `0..n`. [`Graph`] is immutable and stored in CSR
//! form with every adjacency list sorted ascending; edge ids index the sorted
//! canonical edge list. [`GrowingGraph`] is the append-only variant used while
//! a compression is being built.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub type VertexId = u32;

/// An undirected edge in canonical form (`u < v`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Canonicalizes the endpoint pair. Fails on a self-loop.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop { vertex: a as u64 }),
        }
    }

    #[inline]
    pub fn u(self) -> VertexId {
        self.u
    }

    #[inline]
    pub fn v(self) -> VertexId {
        self.v
    }

    #[inline]
    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// Read access to an undirected adjacency structure.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: VertexId) -> &[VertexId];

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    // Parallel to `targets`: id of the edge leading to that neighbor.
    edge_ids: Vec<u32>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are collapsed; use
    /// [`Graph::from_edges_counting`] to learn how many were dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::from_edges_counting(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`], also returning the number of duplicate
    /// edges that were collapsed.
    pub fn from_edges_counting<I>(n: usize, edges: I) -> Result<(Self, usize)>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: x as u64, n });
                }
            }
            list.push(Edge::new(a, b)?);
        }
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        let duplicates = before - list.len();
        Ok((Self::from_sorted_unique(n, list), duplicates))
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    fn from_sorted_unique(n: usize, edges: Vec<Edge>) -> Self {
        let mut degree = vec![0usize; n];
        for e in &edges {
            degree[e.u as usize] += 1;
            degree[e.v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let total = *offsets.last().unwrap();
        let mut targets = vec![0; total];
        let mut edge_ids = vec![0; total];
        let mut cursor: Vec<usize> = offsets[..n].to_vec();
        // Edges are sorted by (u, v), so for every vertex the neighbors `w > x`
        // arrive in ascending order, and so do the neighbors `w < x`. Filling
        // the lower ones first keeps each list sorted.
        for (id, e) in edges.iter().enumerate() {
            let slot = cursor[e.v as usize];
            targets[slot] = e.u;
            edge_ids[slot] = id as u32;
            cursor[e.v as usize] += 1;
        }
        for (id, e) in edges.iter().enumerate() {
            let slot = cursor[e.u as usize];
            targets[slot] = e.v;
            edge_ids[slot] = id as u32;
            cursor[e.u as usize] += 1;
        }
        Graph {
            offsets,
            targets,
            edge_ids,
            edges,
        }
    }

    /// Keeps the vertex set and only the given edges, each of which must
    /// belong to `self`.
    pub fn subgraph<I>(&self, kept: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for e in kept {
            if self.edge_id(e).is_none() {
                return Err(Error::NotSubgraph {
                    u: e.u as u64,
                    v: e.v as u64,
                });
            }
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_unique(self.n(), list))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending canonical order; the position is the edge id.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Edge ids parallel to [`Adjacency::neighbors`].
    #[inline]
    pub fn incident_edge_ids(&self, v: VertexId) -> &[u32] {
        let v = v as usize;
        &self.edge_ids[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Id of the edge `{a, b}` if present.
    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<usize> {
        if a as usize >= self.n() || b as usize >= self.n() {
            return None;
        }
        let nbrs = self.neighbors(a);
        nbrs.binary_search(&b)
            .ok()
            .map(|i| self.incident_edge_ids(a)[i] as usize)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_between(a, b).is_some()
    }
}

impl Adjacency for Graph {
    #[inline]
    fn vertex_count(&self) -> usize {
        self.n()
    }

    #[inline]
    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

/// Append-only adjacency lists; neighbor order is insertion order.
#[derive(Clone, Debug, Default)]
pub struct GrowingGraph {
    adjacency: Vec<Vec<VertexId>>,
    m: usize,
}

impl GrowingGraph {
    pub fn new(n: usize) -> Self {
        GrowingGraph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Inserts `e`. The caller guarantees it is not present yet.
    pub fn add_edge(&mut self, e: Edge) {
        self.adjacency[e.u as usize].push(e.v);
        self.adjacency[e.v as usize].push(e.u);
        self.m += 1;
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn clear(&mut self) {
        for list in &mut self.adjacency {
            list.clear();
        }
        self.m = 0;
    }
}

impl Adjacency for GrowingGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }
}

/// Reusable breadth-first search scratch space.
///
/// Distances are epoch-stamped, so a new search costs time proportional to
/// the explored region rather than to `n`.
#[derive(Clone, Debug)]
pub struct Bfs {
    stamp: Vec<u32>,
    dist: Vec<u32>,
    epoch: u32,
    queue: VecDeque<VertexId>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Bfs {
            stamp: vec![0; n],
            dist: vec![0; n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    /// Explores from `source` up to `max_depth` hops (`None` for unbounded).
    pub fn run<A: Adjacency + ?Sized>(&mut self, g: &A, source: VertexId, max_depth: Option<u32>) {
        if self.stamp.len() < g.vertex_count() {
            self.stamp.resize(g.vertex_count(), 0);
            self.dist.resize(g.vertex_count(), 0);
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let limit = max_depth.unwrap_or(u32::MAX);
        self.queue.clear();
        self.visit(source, 0);
        self.queue.push_back(source);
        while let Some(x) = self.queue.pop_front() {
            let d = self.dist[x as usize];
            if d >= limit {
                continue;
            }
            for &y in g.neighbors(x) {
                if self.stamp[y as usize] != self.epoch {
                    self.visit(y, d + 1);
                    self.queue.push_back(y);
                }
            }
        }
    }

    #[inline]
    fn visit(&mut self, v: VertexId, d: u32) {
        self.stamp[v as usize] = self.epoch;
        self.dist[v as usize] = d;
    }

    /// Hop distance found by the last [`Bfs::run`], if `v` was reached.
    #[inline]
    pub fn distance(&self, v: VertexId) -> Option<u32> {
        (self.stamp[v as usize] == self.epoch).then(|| self.dist[v as usize])
    }
}

/// All vertices `u != v` within `k` hops of `v`, ascending.
pub fn k_hop_neighbors<A: Adjacency + ?Sized>(g: &A, v: VertexId, k: u32) -> Vec<VertexId> {
    let mut bfs = Bfs::new(g.vertex_count());
    bfs.run(g, v, Some(k));
    (0..g.vertex_count() as VertexId)
        .filter(|&u| u != v && bfs.distance(u).is_some())
        .collect()
}

/// Unbounded single-source hop distances.
pub fn distances_from<A: Adjacency + ?Sized>(g: &A, source: VertexId) -> Vec<Option<u32>> {
    let mut bfs = Bfs::new(g.vertex_count());
    bfs.run(g, source, None);
    (0..g.vertex_count() as VertexId).map(|u| bfs.distance(u)).collect()
}

/// A simple path, stored as its vertex sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]).expect("simple path has no repeated vertex"))
    }
}

impl From<Vec<VertexId>> for Path {
    fn from(vertices: Vec<VertexId>) -> Self {
        assert!(vertices.len() >= 2, "a path has at least one edge");
        Path { vertices }
    }
}

/// Calls `visit` with the vertex sequence of every simple path from `u` to
/// `v` with at most `max_len` edges. Paths arrive in depth-first order over
/// the sorted adjacency lists.
///
/// Cost grows as `b^max_len` for average branching factor `b`.
pub fn for_each_simple_path<A, F>(g: &A, u: VertexId, v: VertexId, max_len: usize, mut visit: F)
where
    A: Adjacency + ?Sized,
    F: FnMut(&[VertexId]),
{
    if u == v || max_len == 0 {
        return;
    }
    let mut path: Vec<VertexId> = Vec::with_capacity(max_len + 1);
    let mut cursor: Vec<usize> = Vec::with_capacity(max_len + 1);
    path.push(u);
    cursor.push(0);
    while let Some(&x) = path.last() {
        let nbrs = g.neighbors(x);
        let top = cursor.last_mut().unwrap();
        if *top == nbrs.len() {
            path.pop();
            cursor.pop();
            continue;
        }
        let y = nbrs[*top];
        *top += 1;
        if y == v {
            path.push(v);
            visit(&path);
            path.pop();
        } else if path.len() < max_len && !path.contains(&y) {
            // `path.len()` edges after pushing `y`, plus one to reach `v`.
            path.push(y);
            cursor.push(0);
        }
    }
}

/// Every simple path from `u` to `v` with at most `max_len` edges, ordered by
/// length and then lexicographically by vertex sequence.
pub fn enumerate_simple_paths<A: Adjacency + ?Sized>(
    g: &A,
    u: VertexId,
    v: VertexId,
    max_len: usize,
) -> Vec<Path> {
    let mut out = Vec::new();
    for_each_simple_path(g, u, v, max_len, |p| out.push(Path { vertices: p.to_vec() }));
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn diamond() -> Graph {
        // a=0 b=1 c=2 d=3, K4 minus {a,d}
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn star() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn csr_is_symmetric_and_sorted() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4), (1, 0), (4, 3), (2, 1)]).unwrap();
        let mut total = 0;
        for v in 0..5 {
            let nbrs = g.neighbors(v);
            assert!(nbrs.windows(2).all(|w| w[0] < w[1]));
            for (&w, &id) in nbrs.iter().zip(g.incident_edge_ids(v)) {
                assert!(g.neighbors(w).contains(&v));
                assert_eq!(g.edge(id as usize), Edge::new(v, w).unwrap());
            }
            total += nbrs.len();
        }
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn duplicates_collapse_and_self_loops_fail() {
        let (g, dups) = Graph::from_edges_counting(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!((g.m(), dups), (1, 1));
        assert_eq!(
            Graph::from_edges(4, [(3, 3)]),
            Err(Error::SelfLoop { vertex: 3 })
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn star_neighborhoods() {
        let g = star();
        assert_eq!(k_hop_neighbors(&g, 0, 1), vec![1, 2, 3]);
        assert_eq!(k_hop_neighbors(&g, 1, 1), vec![0]);
        assert_eq!(k_hop_neighbors(&g, 1, 2), vec![0, 2, 3]);
    }

    #[test]
    fn path_neighborhood() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(k_hop_neighbors(&g, 0, 1), vec![1]);
        assert_eq!(k_hop_neighbors(&g, 0, 5), vec![1, 2]);
    }

    fn seqs(paths: &[Path]) -> Vec<Vec<u32>> {
        paths.iter().map(|p| p.vertices().to_vec()).collect()
    }

    #[test]
    fn triangle_paths() {
        let paths = enumerate_simple_paths(&triangle(), 0, 1, 2);
        assert_eq!(seqs(&paths), vec![vec![0, 1], vec![0, 2, 1]]);
    }

    #[test]
    fn no_short_path() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(enumerate_simple_paths(&g, 0, 2, 1).is_empty());
    }

    #[test]
    fn diamond_paths() {
        let paths = enumerate_simple_paths(&diamond(), 1, 2, 2);
        assert_eq!(seqs(&paths), vec![vec![1, 2], vec![1, 0, 2], vec![1, 3, 2]]);
        // a and d are not adjacent, so no 3-edge path exists.
        assert_eq!(enumerate_simple_paths(&diamond(), 1, 2, 3).len(), 3);
    }

    #[test]
    fn growing_graph_bfs() {
        let mut gc = GrowingGraph::new(4);
        gc.add_edge(Edge::new(0, 1).unwrap());
        gc.add_edge(Edge::new(1, 2).unwrap());
        let mut bfs = Bfs::new(4);
        bfs.run(&gc, 0, Some(1));
        assert_eq!(bfs.distance(1), Some(1));
        assert_eq!(bfs.distance(2), None);
        bfs.run(&gc, 0, None);
        assert_eq!(bfs.distance(2), Some(2));
        assert_eq!(bfs.distance(3), None);
    }

    #[test]
    fn subgraph_rejects_foreign_edges() {
        let g = triangle();
        assert!(g.subgraph([Edge::new(0, 1).unwrap()]).is_ok());
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            path.subgraph([Edge::new(0, 2).unwrap()]),
            Err(Error::NotSubgraph { u: 0, v: 2 })
        );
    }
}
