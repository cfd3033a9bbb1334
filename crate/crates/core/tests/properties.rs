mod common;

use common::{brute_paths, floyd_warshall, proportion, small_graph};
use nhood_core::graph::{enumerate_simple_paths, k_hop_neighbors};
use nhood_core::ordering::{ec_scores, random_order};
use nhood_core::{compress_basic, verify, Graph, ProportionFunction, Ratio, VertexId};
use proptest::prelude::*;

/// Failing (vertex, level) pairs computed from a full distance matrix.
fn violations_by_matrix(g: &Graph, gc: &Graph, pf: &ProportionFunction) -> Vec<(VertexId, usize)> {
    let d = floyd_warshall(gc);
    let mut out = Vec::new();
    for (v, row) in d.iter().enumerate() {
        let neighbors: Vec<usize> = (0..g.n()).filter(|&u| g.has_edge(v as u32, u as u32)).collect();
        for level in 1..=pf.t() {
            let reached = neighbors
                .iter()
                .filter(|&&u| row[u].is_some_and(|x| x as usize <= level))
                .count();
            let deg = neighbors.len() as u64;
            if deg > 0 && Ratio::new(reached as u64, deg) < pf.p(level) {
                out.push((v as VertexId, level));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn basic_scan_is_sound(g in small_graph(9), pf in proportion(3), seed in any::<u64>()) {
        let result = compress_basic(&g, &pf, &random_order(&g, seed)).unwrap();
        let gc = result.to_graph();
        prop_assert!(verify(&g, &gc, &pf).unwrap().ok());
        prop_assert!(result.kept.iter().all(|&e| g.edge_id(e).is_some()));
        // |E_c| >= p(1)|E|, exactly.
        prop_assert!(Ratio::from_integer(result.kept_count() as u64) >= pf.p(1) * Ratio::from_integer(g.m() as u64));
    }

    #[test]
    fn spanner_outputs_stretch_at_most_t(g in small_graph(9), t in 1usize..=3, seed in any::<u64>()) {
        let pf = ProportionFunction::spanner(t);
        let gc = compress_basic(&g, &pf, &random_order(&g, seed)).unwrap().to_graph();
        let dg = floyd_warshall(&g);
        let dc = floyd_warshall(&gc);
        for u in 0..g.n() {
            for v in 0..g.n() {
                match (dg[u][v], dc[u][v]) {
                    (Some(a), Some(b)) => {
                        prop_assert!(b >= a);
                        prop_assert!(b <= t as u32 * a);
                    }
                    (Some(_), None) => prop_assert!(false, "pair {u},{v} disconnected"),
                    (None, c) => prop_assert!(c.is_none()),
                }
            }
        }
    }

    #[test]
    fn verify_matches_distance_matrix(
        g in small_graph(8),
        pf in proportion(3),
        keep in proptest::collection::vec(any::<bool>(), 28),
    ) {
        let kept: Vec<_> = g.edges().iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
        let gc = g.subgraph(kept).unwrap();
        let report = verify(&g, &gc, &pf).unwrap();
        let found: Vec<(VertexId, usize)> = report.violations.iter().map(|v| (v.vertex, v.level)).collect();
        prop_assert_eq!(found, violations_by_matrix(&g, &gc, &pf));
    }

    #[test]
    fn k_hop_sets_grow_with_k(g in small_graph(10), v in 0u32..10) {
        let v = v % g.n() as u32;
        let d = floyd_warshall(&g);
        let mut previous: Vec<VertexId> = Vec::new();
        for k in 1..=4u32 {
            let hop = k_hop_neighbors(&g, v, k);
            prop_assert!(previous.iter().all(|u| hop.contains(u)));
            let expected: Vec<VertexId> = (0..g.n() as VertexId)
                .filter(|&u| u != v && d[v as usize][u as usize].is_some_and(|x| x <= k))
                .collect();
            prop_assert_eq!(&hop, &expected);
            previous = hop;
        }
        // The 1-hop set is exactly the neighbor list.
        prop_assert_eq!(k_hop_neighbors(&g, v, 1), (0..g.n() as VertexId).filter(|&u| g.has_edge(v, u)).collect::<Vec<_>>());
    }

    #[test]
    fn path_enumeration_matches_recursion(g in small_graph(7), u in 0u32..7, v in 0u32..7, len in 1usize..=4) {
        let n = g.n() as u32;
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let mut got: Vec<Vec<VertexId>> = enumerate_simple_paths(&g, u, v, len)
            .iter()
            .map(|p| p.vertices().to_vec())
            .collect();
        // Shortlex order on the way out.
        prop_assert!(got.windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
        got.sort();
        prop_assert_eq!(&got, &brute_paths(&g, u, v, len));
        // A one-edge path exists iff uv is an edge.
        let direct = enumerate_simple_paths(&g, u, v, 1);
        prop_assert_eq!(direct.len(), usize::from(g.has_edge(u, v)));
    }

    #[test]
    fn ec_scores_match_pairwise_count(g in small_graph(7), t in 1usize..=3) {
        let mut expected = vec![0u64; g.m()];
        for e in g.edges() {
            for path in brute_paths(&g, e.u(), e.v(), t) {
                for w in path.windows(2) {
                    expected[g.edge_between(w[0], w[1]).unwrap()] += 1;
                }
            }
        }
        let scores = ec_scores(&g, t);
        prop_assert_eq!(scores.as_slice(), &expected[..]);
        // Every edge lies on its own direct path.
        prop_assert!(scores.as_slice().iter().all(|&s| s >= 1));
    }

    #[test]
    fn full_proportion_keeps_everything(g in small_graph(8), seed in any::<u64>()) {
        let result = compress_basic(&g, &ProportionFunction::parse("1").unwrap(), &random_order(&g, seed)).unwrap();
        prop_assert_eq!(result.kept, g.edges().to_vec());
    }
}
