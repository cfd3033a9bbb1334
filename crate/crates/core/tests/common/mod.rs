#![allow(dead_code)]

use nhood_core::{Graph, ProportionFunction, Ratio, VertexId};
use proptest::prelude::*;

/// Small graph: `n` vertices and an arbitrary subset of the possible pairs.
pub fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n as VertexId {
                for u in 0..v {
                    if mask[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Monotone proportions with denominators up to 4 and `t` in `1..=max_t`.
pub fn proportion(max_t: usize) -> impl Strategy<Value = ProportionFunction> {
    proptest::collection::vec((0u64..=4, 1u64..=4), 1..=max_t).prop_map(|raw| {
        let mut props: Vec<Ratio> = raw
            .into_iter()
            .map(|(a, b)| Ratio::new(a.min(b), b))
            .collect();
        props.sort();
        ProportionFunction::new(props).unwrap()
    })
}

pub fn pf(s: &str) -> ProportionFunction {
    ProportionFunction::parse(s).unwrap()
}

/// All-pairs hop distances by Floyd–Warshall on an adjacency matrix.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for e in g.edges() {
        let (u, v) = (e.u() as usize, e.v() as usize);
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Simple paths from `u` to `v` with at most `max_len` edges, by plain
/// recursion over the adjacency matrix.
pub fn brute_paths(g: &Graph, u: VertexId, v: VertexId, max_len: usize) -> Vec<Vec<VertexId>> {
    fn walk(
        g: &Graph,
        target: VertexId,
        max_len: usize,
        path: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let last = *path.last().unwrap();
        if last == target {
            out.push(path.clone());
            return;
        }
        if path.len() > max_len {
            return;
        }
        for next in 0..g.n() as VertexId {
            if g.has_edge(last, next) && !path.contains(&next) {
                path.push(next);
                walk(g, target, max_len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, v, max_len, &mut vec![u], &mut out);
    out.sort();
    out
}
