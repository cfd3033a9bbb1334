//! Synthetic `G(n,m)` instances and bundled reference graphs.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};
use crate::{edgelist, Error, Result};

const ZACHARY: &str = include_str!("../data/zachary.txt");

pub const BUILTIN_NAMES: &[&str] = &["diamond", "triangle", "path3", "star4", "zachary"];

/// A family of `count` independent `G(n,m)` graphs. Instance `i` uses seed
/// `base_seed + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub count: usize,
    pub n: usize,
    pub m: usize,
    pub base_seed: u64,
}

impl FamilySpec {
    pub fn new(count: usize, n: usize, m: usize, base_seed: u64) -> Result<Self> {
        let max = max_edges(n);
        if m as u64 > max {
            return Err(Error::TooManyEdges { n, m, max });
        }
        if count == 0 {
            return Err(Error::InvalidFamily("a family needs at least one graph".to_string()));
        }
        Ok(FamilySpec {
            count,
            n,
            m,
            base_seed,
        })
    }

    pub fn seed(&self, index: usize) -> u64 {
        self.base_seed.wrapping_add(index as u64)
    }

    pub fn instance(&self, index: usize) -> Graph {
        gen_gnm(self.n, self.m, self.seed(index)).expect("validated at construction")
    }

    pub fn instances(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.count).map(move |i| self.instance(i))
    }
}

pub fn max_edges(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Decodes a pair index `k` in `0..n(n-1)/2` to `(u, v)` with `u < v`, using
/// the column order `k = v(v-1)/2 + u`.
fn decode_pair(k: u64) -> (VertexId, VertexId) {
    let mut v = ((1.0 + libm::sqrt(1.0 + 8.0 * k as f64)) / 2.0) as u64;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    let u = k - v * (v - 1) / 2;
    (u as VertexId, v as VertexId)
}

/// Uniform simple graph with exactly `n` vertices and `m` edges.
pub fn gen_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = max_edges(n);
    if m as u64 > max {
        return Err(Error::TooManyEdges { n, m, max });
    }
    let mut rng = crate::ordering::rng(seed);
    let picks = rand::seq::index::sample(&mut rng, max as usize, m);
    let edges: Vec<(VertexId, VertexId)> = picks.iter().map(|k| decode_pair(k as u64)).collect();
    Graph::from_edges(n, edges)
}

pub fn builtin(name: &str) -> Result<Graph> {
    let edges: &[(VertexId, VertexId)] = match name {
        "diamond" => &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
        "triangle" => &[(0, 1), (0, 2), (1, 2)],
        "path3" => &[(0, 1), (1, 2)],
        "star4" => &[(0, 1), (0, 2), (0, 3)],
        "zachary" => {
            return Ok(edgelist::parse_edge_list(ZACHARY)
                .expect("bundled data parses")
                .graph)
        }
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    let n = edges.iter().map(|&(a, b)| a.max(b) as usize + 1).max().unwrap_or(0);
    Graph::from_edges(n, edges.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Adjacency;

    #[test]
    fn pair_decoding_is_a_bijection() {
        let n = 40u64;
        let mut seen = alloc::vec![false; (n * n) as usize];
        for k in 0..max_edges(n as usize) {
            let (u, v) = decode_pair(k);
            assert!(u < v && (v as u64) < n);
            let slot = (u as u64 * n + v as u64) as usize;
            assert!(!seen[slot]);
            seen[slot] = true;
        }
        // Large indices stay exact despite the float estimate.
        let k = max_edges(3_000_000) - 1;
        assert_eq!(decode_pair(k), (2_999_998, 2_999_999));
    }

    #[test]
    fn gnm_dimensions() {
        let g = gen_gnm(20, 60, 7).unwrap();
        assert_eq!((g.n(), g.m()), (20, 60));
        assert_eq!(gen_gnm(20, 60, 7).unwrap(), g);
        assert_eq!(gen_gnm(3, 3, 1).unwrap(), builtin("triangle").unwrap());
        let empty = gen_gnm(5, 0, 1).unwrap();
        assert_eq!((empty.n(), empty.m()), (5, 0));
        assert!(matches!(gen_gnm(4, 7, 0), Err(Error::TooManyEdges { max: 6, .. })));
    }

    #[test]
    fn builtins() {
        let d = builtin("diamond").unwrap();
        assert_eq!((d.n(), d.m()), (4, 5));
        assert!(!d.has_edge(0, 3));
        let z = builtin("zachary").unwrap();
        assert_eq!((z.n(), z.m()), (34, 78));
        assert_eq!(z.degree(33), 17);
        assert_eq!(z.degree(0), 16);
        let t = builtin("triangle").unwrap();
        assert_eq!((t.n(), t.m()), (3, 3));
        assert!(matches!(builtin("petersen"), Err(Error::UnknownBuiltin(_))));
        for name in BUILTIN_NAMES {
            assert!(builtin(name).is_ok());
        }
    }

    #[test]
    fn family_seeds() {
        let fam = FamilySpec::new(3, 20, 60, 5).unwrap();
        let graphs: Vec<Graph> = fam.instances().collect();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[1], gen_gnm(20, 60, 6).unwrap());
        assert!(FamilySpec::new(3, 4, 7, 0).is_err());
        assert!(FamilySpec::new(0, 4, 2, 0).is_err());
    }
}
