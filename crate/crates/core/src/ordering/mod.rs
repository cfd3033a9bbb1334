//! Edge orders fed to [`compress_basic`](crate::compress_basic).

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph};

mod ec;
mod sa;

pub use ec::{ec_order, ec_scores, EdgeScore};
pub use sa::{sa_compress, sa_search, SaParams, SaSearch};

/// Which strategy produced an ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderingKind {
    Random,
    Lp,
    Ec,
    Sa,
    /// Supplied by the caller.
    Custom,
}

impl OrderingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderingKind::Random => "random",
            OrderingKind::Lp => "lp",
            OrderingKind::Ec => "ec",
            OrderingKind::Sa => "sa",
            OrderingKind::Custom => "custom",
        }
    }
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderingKind {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" | "basic" | "basic-random" => Ok(OrderingKind::Random),
            "lp" => Ok(OrderingKind::Lp),
            "ec" => Ok(OrderingKind::Ec),
            "sa" => Ok(OrderingKind::Sa),
            other => Err(alloc::format!(
                "unknown ordering {:?} (expected random, lp, ec or sa)",
                other
            )),
        }
    }
}

/// A sequence of edges with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrdering {
    edges: Vec<Edge>,
    kind: OrderingKind,
    seed: Option<u64>,
}

impl EdgeOrdering {
    pub fn new(edges: Vec<Edge>, kind: OrderingKind, seed: Option<u64>) -> Self {
        EdgeOrdering { edges, kind, seed }
    }

    /// A caller-supplied order. Whether it is a permutation is checked when
    /// it is used.
    pub fn custom(edges: Vec<Edge>) -> Self {
        Self::new(edges, OrderingKind::Custom, None)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random permutation of the edges (seeded Fisher-Yates).
pub fn random_order(g: &Graph, seed: u64) -> EdgeOrdering {
    let mut edges = g.edges().to_vec();
    edges.shuffle(&mut rng(seed));
    EdgeOrdering::new(edges, OrderingKind::Random, Some(seed))
}
