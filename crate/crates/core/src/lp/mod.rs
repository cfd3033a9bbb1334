//! The relaxed linear program of `(p,t)`-compression and the LP edge order.
//!
//! Variables: `x_e` per edge and `f_w` per simple path `w` of length at most
//! `t` between the endpoints of an edge, all relaxed to `[0, 1]`. Rows:
//!
//! - `f_w <= x_e` for every path `w` and every edge `e` on it,
//! - `sum_{w in W_uv} f_w <= 1` for every edge `uv`,
//! - `sum_{v in N(u)} sum_{w in W^i_uv} f_w >= p(i)·|N(u)|` for every vertex `u`
//!   and level `1 <= i <= t`, where `W^i_uv` keeps the paths of length `<= i`.
//!
//! The objective minimizes `sum x_e`. Sorting the edges by their optimal
//! `x_e` gives the LP order for the basic scan.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::graph::{for_each_simple_path, Adjacency, Graph, VertexId};
use crate::ordering::{EdgeOrdering, OrderingKind};
use crate::{Error, ProportionFunction, Result};

mod simplex;

pub use simplex::{solve_lp, solve_lp_with, LpSolution, LpStatus, SimplexOptions};

/// Feasibility tolerance for solutions and the witness check.
pub const TOLERANCE: f64 = 1e-7;

/// Size guards for [`build_lp_with_limits`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LpLimits {
    pub max_edges: usize,
    pub max_t: usize,
    /// Cap on path variables; dense graphs at `t = 3` exceed it quickly.
    pub max_paths: usize,
}

impl Default for LpLimits {
    fn default() -> Self {
        LpLimits {
            max_edges: 5000,
            max_t: 3,
            max_paths: 10_000,
        }
    }
}

/// A path variable `f_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowPath {
    /// Edge id of the pair `uv` whose path set contains this path.
    pub pair: usize,
    pub vertices: Vec<VertexId>,
    /// Ids of the edges along the path.
    pub edge_ids: Vec<usize>,
}

impl FlowPath {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// `f_path <= x_edge`.
    PathEdge { path: usize, edge: usize },
    /// At most one unit of flow per edge pair.
    PairFlow { edge: usize },
    /// Proportion row of `vertex` at hop `level`.
    Neighborhood { vertex: VertexId, level: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub kind: RowKind,
    /// `(column, coefficient)` pairs; see [`LpModel::column_name`].
    pub terms: Vec<(usize, f64)>,
    pub sense: Sense,
    pub rhs: f64,
}

impl Row {
    pub fn activity(&self, values: &[f64]) -> f64 {
        self.terms.iter().map(|&(j, a)| a * values[j]).sum()
    }

    /// How far `values` fall outside this row (0 when satisfied).
    pub fn violation(&self, values: &[f64]) -> f64 {
        let lhs = self.activity(values);
        match self.sense {
            Sense::Le => (lhs - self.rhs).max(0.0),
            Sense::Ge => (self.rhs - lhs).max(0.0),
        }
    }
}

/// Columns `0..m` are the `x_e` (by edge id), columns `m..` the `f_w` (by
/// path index). All columns are bounded to `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpModel {
    num_edges: usize,
    paths: Vec<FlowPath>,
    rows: Vec<Row>,
}

impl LpModel {
    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn paths(&self) -> &[FlowPath] {
        &self.paths
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn num_columns(&self) -> usize {
        self.num_edges + self.paths.len()
    }

    pub fn x_column(&self, edge: usize) -> usize {
        edge
    }

    pub fn f_column(&self, path: usize) -> usize {
        self.num_edges + path
    }

    pub fn column_name(&self, j: usize) -> String {
        if j < self.num_edges {
            format!("x{}", j)
        } else {
            format!("f{}", j - self.num_edges)
        }
    }

    /// Objective coefficient of column `j`.
    pub fn cost(&self, j: usize) -> f64 {
        if j < self.num_edges {
            1.0
        } else {
            0.0
        }
    }

    /// All `x_e = 1`, the direct-path `f` of every edge at 1, other paths 0.
    pub fn witness(&self) -> Vec<f64> {
        let mut values = alloc::vec![0.0; self.num_columns()];
        values[..self.num_edges].iter_mut().for_each(|x| *x = 1.0);
        for (k, p) in self.paths.iter().enumerate() {
            if p.len() == 1 {
                values[self.num_edges + k] = 1.0;
            }
        }
        values
    }

    pub fn max_violation(&self, values: &[f64]) -> f64 {
        let rows = self.rows.iter().map(|r| r.violation(values));
        let bounds = values.iter().map(|&v| (-v).max(v - 1.0).max(0.0));
        rows.chain(bounds).fold(0.0, f64::max)
    }

    /// Writes the model in CPLEX LP text format. Column names are `x<edge id>`
    /// and `f<path index>`; rows are named `pe<k>` (path/edge), `fl<edge id>`
    /// (pair flow) and `nb<vertex>_<level>` (neighborhood).
    pub fn to_lp_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "\\ relaxed (p,t)-compression model");
        let _ = writeln!(out, "\\ {} x columns, {} f columns, {} rows", self.num_edges, self.paths.len(), self.rows.len());
        let _ = writeln!(out, "Minimize");
        out.push_str(" obj:");
        if self.num_edges == 0 {
            out.push_str(" 0");
        }
        for e in 0..self.num_edges {
            if e > 0 && e % 16 == 0 {
                out.push_str("\n    ");
            }
            let sep = if e == 0 { " " } else { " + " };
            let _ = write!(out, "{}x{}", sep, e);
        }
        out.push('\n');
        let _ = writeln!(out, "Subject To");
        let mut pe = 0;
        for row in &self.rows {
            let name = match row.kind {
                RowKind::PathEdge { .. } => {
                    pe += 1;
                    format!("pe{}", pe - 1)
                }
                RowKind::PairFlow { edge } => format!("fl{}", edge),
                RowKind::Neighborhood { vertex, level } => format!("nb{}_{}", vertex, level),
            };
            let _ = write!(out, " {}:", name);
            if row.terms.is_empty() {
                if self.num_columns() == 0 {
                    out.truncate(out.len() - name.len() - 2);
                    continue;
                }
                out.push_str(" 0 x0");
            }
            for (k, &(j, a)) in row.terms.iter().enumerate() {
                let sign = if a < 0.0 { "-" } else { "+" };
                let mag = a.abs();
                if k == 0 && sign == "+" {
                    out.push(' ');
                } else {
                    let _ = write!(out, " {} ", sign);
                }
                if mag != 1.0 {
                    let _ = write!(out, "{} ", mag);
                }
                out.push_str(&self.column_name(j));
            }
            let op = match row.sense {
                Sense::Le => "<=",
                Sense::Ge => ">=",
            };
            let _ = writeln!(out, " {} {}", op, row.rhs);
        }
        let _ = writeln!(out, "Bounds");
        for j in 0..self.num_columns() {
            let _ = writeln!(out, " 0 <= {} <= 1", self.column_name(j));
        }
        let _ = writeln!(out, "End");
        out
    }
}

pub fn build_lp(g: &Graph, pf: &ProportionFunction) -> Result<LpModel> {
    build_lp_with_limits(g, pf, LpLimits::default())
}

pub fn build_lp_with_limits(g: &Graph, pf: &ProportionFunction, limits: LpLimits) -> Result<LpModel> {
    let t = pf.t();
    if g.m() > limits.max_edges || t > limits.max_t {
        return Err(Error::LpTooLarge {
            edges: g.m(),
            t,
            max_edges: limits.max_edges,
            max_t: limits.max_t,
        });
    }
    let m = g.m();

    // Path sets per edge pair, each in shortest-first order.
    let mut paths: Vec<FlowPath> = Vec::new();
    let mut pair_paths: Vec<Vec<usize>> = Vec::with_capacity(m);
    for (id, e) in g.edges().iter().enumerate() {
        let (u, v) = e.endpoints();
        let start = paths.len();
        for_each_simple_path(g, u, v, t, |seq| {
            let edge_ids = seq
                .windows(2)
                .map(|w| g.edge_between(w[0], w[1]).expect("path follows graph edges"))
                .collect();
            paths.push(FlowPath {
                pair: id,
                vertices: seq.to_vec(),
                edge_ids,
            });
        });
        paths[start..].sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
        pair_paths.push((start..paths.len()).collect());
        if paths.len() > limits.max_paths {
            return Err(Error::LpTooManyPaths {
                max_paths: limits.max_paths,
            });
        }
    }

    let mut rows = Vec::new();
    for (k, p) in paths.iter().enumerate() {
        for &e in &p.edge_ids {
            rows.push(Row {
                kind: RowKind::PathEdge { path: k, edge: e },
                terms: alloc::vec![(m + k, 1.0), (e, -1.0)],
                sense: Sense::Le,
                rhs: 0.0,
            });
        }
    }
    for (e, members) in pair_paths.iter().enumerate() {
        rows.push(Row {
            kind: RowKind::PairFlow { edge: e },
            terms: members.iter().map(|&k| (m + k, 1.0)).collect(),
            sense: Sense::Le,
            rhs: 1.0,
        });
    }
    for u in 0..g.n() as VertexId {
        let incident = g.incident_edge_ids(u);
        for level in 1..=t {
            let mut terms = Vec::new();
            for &e in incident {
                for &k in &pair_paths[e as usize] {
                    if paths[k].len() <= level {
                        terms.push((m + k, 1.0));
                    }
                }
            }
            let p = pf.p(level);
            let rhs = *p.numer() as f64 * g.degree(u) as f64 / *p.denom() as f64;
            rows.push(Row {
                kind: RowKind::Neighborhood { vertex: u, level },
                terms,
                sense: Sense::Ge,
                rhs,
            });
        }
    }

    let model = LpModel {
        num_edges: m,
        paths,
        rows,
    };
    let witness = model.witness();
    if let Some(row) = model
        .rows
        .iter()
        .position(|r| r.violation(&witness) > TOLERANCE)
    {
        return Err(Error::LpWitness { row });
    }
    Ok(model)
}

/// Quantized sort key so that values equal up to solver noise tie.
fn score_key(x: f64) -> i64 {
    libm::round(x / TOLERANCE) as i64
}

/// Sorts the edges by their relaxed `x_e`, descending; ties (within the
/// solver tolerance) keep canonical edge order.
pub fn order_from_solution(g: &Graph, solution: &LpSolution) -> EdgeOrdering {
    let mut ids: Vec<usize> = (0..g.m()).collect();
    ids.sort_by_key(|&id| core::cmp::Reverse(score_key(solution.x[id])));
    EdgeOrdering::new(ids.into_iter().map(|id| g.edge(id)).collect(), OrderingKind::Lp, None)
}

pub fn lp_order(g: &Graph, pf: &ProportionFunction) -> Result<EdgeOrdering> {
    let model = build_lp(g, pf)?;
    let solution = solve_lp(&model);
    if solution.status != LpStatus::Optimal {
        return Err(Error::LpNotOptimal(solution.status));
    }
    Ok(order_from_solution(g, &solution))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::builtin;

    fn pf(s: &str) -> ProportionFunction {
        ProportionFunction::parse(s).unwrap()
    }

    fn count_rows(model: &LpModel) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for r in model.rows() {
            match r.kind {
                RowKind::PathEdge { .. } => c.0 += 1,
                RowKind::PairFlow { .. } => c.1 += 1,
                RowKind::Neighborhood { .. } => c.2 += 1,
            }
        }
        c
    }

    #[test]
    fn single_edge_model() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let model = build_lp(&g, &pf("1")).unwrap();
        assert_eq!(model.num_columns(), 2);
        assert_eq!(count_rows(&model), (1, 1, 2));
        let pe = &model.rows()[0];
        assert_eq!((pe.terms.as_slice(), pe.sense, pe.rhs), (&[(1, 1.0), (0, -1.0)][..], Sense::Le, 0.0));
        let fl = &model.rows()[1];
        assert_eq!((fl.terms.as_slice(), fl.sense, fl.rhs), (&[(1, 1.0)][..], Sense::Le, 1.0));
        for nb in &model.rows()[2..] {
            assert_eq!((nb.terms.as_slice(), nb.sense, nb.rhs), (&[(1, 1.0)][..], Sense::Ge, 1.0));
        }
    }

    #[test]
    fn triangle_and_path_column_counts() {
        let tri = build_lp(&builtin("triangle").unwrap(), &pf("0,1")).unwrap();
        assert_eq!((tri.num_edges(), tri.paths().len()), (3, 6));
        // 3 direct paths (1 edge each) + 3 two-paths (2 edges each).
        assert_eq!(count_rows(&tri), (9, 3, 6));

        let path = build_lp(&builtin("path3").unwrap(), &pf("1")).unwrap();
        assert_eq!((path.num_edges(), path.paths().len()), (2, 2));
    }

    #[test]
    fn neighborhood_rows_filter_by_level() {
        let tri = build_lp(&builtin("triangle").unwrap(), &pf("0,1")).unwrap();
        for r in tri.rows() {
            if let RowKind::Neighborhood { level, .. } = r.kind {
                // Each vertex has two incident pairs: level 1 sees their
                // direct paths, level 2 also their detours.
                assert_eq!(r.terms.len(), 2 * level);
                assert_eq!(r.rhs, if level == 1 { 0.0 } else { 2.0 });
            }
        }
    }

    #[test]
    fn limits_are_enforced() {
        let g = builtin("triangle").unwrap();
        assert!(matches!(build_lp(&g, &pf("0,0,0,1")), Err(Error::LpTooLarge { t: 4, .. })));
        let tight = LpLimits { max_edges: 2, max_t: 3, max_paths: 10 };
        assert!(matches!(
            build_lp_with_limits(&g, &pf("1"), tight),
            Err(Error::LpTooLarge { edges: 3, .. })
        ));
        // The triangle has six paths at t = 2.
        let few = LpLimits { max_paths: 5, ..LpLimits::default() };
        assert_eq!(
            build_lp_with_limits(&g, &pf("0,1"), few),
            Err(Error::LpTooManyPaths { max_paths: 5 })
        );
        assert!(build_lp_with_limits(&g, &pf("0,1"), LpLimits { max_paths: 6, ..few }).is_ok());
    }

    #[test]
    fn lp_text_dump() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let text = build_lp(&g, &pf("1")).unwrap().to_lp_text();
        assert!(text.contains("Minimize\n obj: x0\n"));
        assert!(text.contains(" pe0: f0 - x0 <= 0\n"));
        assert!(text.contains(" fl0: f0 <= 1\n"));
        assert!(text.contains(" nb0_1: f0 >= 1\n"));
        assert!(text.contains(" 0 <= f0 <= 1\n"));
        assert!(text.ends_with("End\n"));
    }

    #[test]
    fn single_edge_order() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(lp_order(&g, &pf("1")).unwrap().edges(), g.edges());
    }

    #[test]
    fn triangle_full_proportion_is_canonical() {
        let g = builtin("triangle").unwrap();
        let order = lp_order(&g, &pf("1")).unwrap();
        assert_eq!(order.edges(), g.edges());
        assert_eq!(order.kind(), OrderingKind::Lp);
    }
}
