//! Neighborhood-preserving `(p,t)`-compression of simple undirected graphs.
//!
//! A `(p,t)`-compression keeps a subset of the edges such that, for every
//! vertex `v` and every hop level `1 <= i <= t`, at least a proportion `p(i)`
//! of the original neighbors of `v` can still be reached from `v` within `i`
//! hops. The crate provides:
//!
//! - [`graph`]: the immutable [`Graph`], bounded BFS and simple-path enumeration,
//! - [`compress`]: the incremental edge-scan compressor and an independent verifier,
//! - [`ordering`]: random, edge-connectivity and simulated-annealing edge orders,
//! - [`lp`]: the relaxed linear program and its bounded-variable simplex solver,
//! - [`eval`]: compression ratio, stretch, shortest-path histograms and a
//!   brute-force optimum for tiny graphs,
//! - [`gen`]: `G(n,m)` instances and the bundled reference graphs.
//!
//! The crate is `no_std` and only needs an allocator. File IO, timing and the
//! command line live in the `nhood` companion crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod compress;
pub mod edgelist;
mod error;
pub mod eval;
pub mod gen;
pub mod graph;
pub mod lp;
pub mod ordering;
pub mod proportion;

pub use compress::{check_node, compress_basic, verify, CompressionResult, VerificationReport, Violation};
pub use error::Error;
pub use graph::{Adjacency, Edge, Graph, GrowingGraph, Path, VertexId};
pub use ordering::{EdgeOrdering, OrderingKind, SaParams};
pub use proportion::{ProportionFunction, Ratio};

pub type Result<T, E = Error> = core::result::Result<T, E>;
