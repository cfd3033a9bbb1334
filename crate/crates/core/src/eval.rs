//! Evaluation metrics and the brute-force optimum for tiny graphs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::compress::verify;
use crate::graph::{Bfs, Edge, Graph, VertexId};
use crate::{Error, ProportionFunction, Ratio, Result};

fn check_subgraph(g: &Graph, gc: &Graph) -> Result<()> {
    if gc.n() != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            found: gc.n(),
        });
    }
    match gc.edges().iter().find(|&&e| g.edge_id(e).is_none()) {
        Some(e) => Err(Error::NotSubgraph {
            u: e.u() as u64,
            v: e.v() as u64,
        }),
        None => Ok(()),
    }
}

/// Fraction of deleted edges, `(|E| - |E_c|) / |E|`.
pub fn compression_ratio(g: &Graph, gc: &Graph) -> Result<Ratio> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    check_subgraph(g, gc)?;
    Ok(Ratio::new((g.m() - gc.m()) as u64, g.m() as u64))
}

/// Shortest-path length distribution over unordered vertex pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpHistogram {
    /// Hop distance to number of pairs at that distance.
    pub counts: BTreeMap<u32, u64>,
    /// Pairs with no connecting path.
    pub disconnected: u64,
}

impl SpHistogram {
    pub fn connected(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn total_pairs(&self) -> u64 {
        self.connected() + self.disconnected
    }

    pub fn max_distance(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// Mean distance over connected pairs.
    pub fn mean_distance(&self) -> Option<f64> {
        let connected = self.connected();
        (connected > 0).then(|| {
            let sum: u64 = self.counts.iter().map(|(&d, &c)| d as u64 * c).sum();
            sum as f64 / connected as f64
        })
    }
}

/// All-pairs BFS histogram; each unordered pair is counted once.
pub fn sp_histogram(g: &Graph) -> SpHistogram {
    let mut hist = SpHistogram::default();
    let mut bfs = Bfs::new(g.n());
    for s in 0..g.n() as VertexId {
        bfs.run(g, s, None);
        for u in s + 1..g.n() as VertexId {
            match bfs.distance(u) {
                Some(d) => *hist.counts.entry(d).or_insert(0) += 1,
                None => hist.disconnected += 1,
            }
        }
    }
    hist
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StretchReport {
    pub ok: bool,
    /// Largest `dist_gc(u, v)` over removed edges `(u, v)`; `None` when some
    /// removed edge has disconnected endpoints. Reported as 1 when nothing
    /// was removed.
    pub max_stretch: Option<u32>,
}

/// Checks `dist_gc(u, v) <= t` for every edge of `g` missing from `gc`.
pub fn stretch_check(g: &Graph, gc: &Graph, t: u32) -> Result<StretchReport> {
    check_subgraph(g, gc)?;
    let mut bfs = Bfs::new(g.n());
    let mut max = Some(1u32);
    let mut last_source = None;
    for &e in g.edges() {
        if gc.edge_id(e).is_some() {
            continue;
        }
        // Edges are sorted by their smaller endpoint, so one BFS per source.
        if last_source != Some(e.u()) {
            bfs.run(gc, e.u(), None);
            last_source = Some(e.u());
        }
        max = match (max, bfs.distance(e.v())) {
            (Some(a), Some(d)) => Some(a.max(d)),
            _ => None,
        };
    }
    Ok(StretchReport {
        ok: max.is_some_and(|s| s <= t),
        max_stretch: max,
    })
}

/// Largest `dist_gc(u, v) / dist_g(u, v)` over all pairs connected in `g`.
/// `None` when such a pair is disconnected in `gc`.
pub fn max_pair_stretch(g: &Graph, gc: &Graph) -> Result<Option<Ratio>> {
    check_subgraph(g, gc)?;
    let mut in_g = Bfs::new(g.n());
    let mut in_gc = Bfs::new(g.n());
    let mut worst = Ratio::from_integer(1);
    for s in 0..g.n() as VertexId {
        in_g.run(g, s, None);
        in_gc.run(gc, s, None);
        for u in s + 1..g.n() as VertexId {
            if let Some(d) = in_g.distance(u) {
                match in_gc.distance(u) {
                    Some(dc) => worst = worst.max(Ratio::new(dc as u64, d as u64)),
                    None => return Ok(None),
                }
            }
        }
    }
    Ok(Some(worst))
}

pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalCompression {
    pub size: usize,
    pub witness: Vec<Edge>,
}

/// Smallest `(p,t)`-compression by exhaustive search over edge subsets in
/// increasing cardinality. Feasibility is monotone under adding edges, so the
/// first feasible size is the minimum.
pub fn brute_force_optimal(g: &Graph, pf: &ProportionFunction) -> Result<OptimalCompression> {
    let m = g.m();
    if m > BRUTE_FORCE_LIMIT {
        return Err(Error::BruteForceTooLarge {
            edges: m,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let full: u32 = if m == 0 { 0 } else { u32::MAX >> (32 - m) };
    for k in 0..=m {
        // Gosper's hack: all m-bit masks with k bits set, ascending.
        let mut mask: u32 = if k == 0 { 0 } else { u32::MAX >> (32 - k) };
        loop {
            let kept: Vec<Edge> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| g.edge(i)).collect();
            let gc = g.subgraph(kept.iter().copied())?;
            if verify(g, &gc, pf)?.ok() {
                return Ok(OptimalCompression { size: k, witness: kept });
            }
            if k == 0 || mask == full {
                break;
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            if ripple > full || ripple == 0 {
                break;
            }
            mask = ripple | (((mask ^ ripple) >> 2) / low);
            if mask > full {
                break;
            }
        }
    }
    unreachable!("the full edge set is always a valid compression")
}
