//! Bounded-variable simplex in revised form with an explicit dense basis
//! inverse.
//!
//! Every row is brought to `a·y + s = b` with a non-negative slack, and the
//! structural columns keep their `[0, 1]` bounds implicitly: a nonbasic
//! column sits at either bound.
//!
//! The solve starts from the all-slack basis with every structural column at
//! zero. All costs are non-negative, so that basis is dual feasible and the
//! dual simplex drives out the violated proportion rows. Most `f_w <= x_e`
//! rows are slack at the optimum, so they are added lazily: only those of
//! paths with at most two edges are present at first, and after each optimum the violated
//! rows are appended to the current basis with their slacks basic, which
//! keeps it dual feasible, and the dual simplex continues. The restricted
//! problem is a relaxation of the full one, so its optimum is optimal for
//! the full model once it is feasible there. A primal pass on recomputed
//! multipliers confirms each optimum.
//!
//! Pricing is Dantzig's rule in both passes. After a run of degenerate
//! pivots the solver switches to smallest-index choices, and goes back after
//! the next non-degenerate step.

use alloc::vec;
use alloc::vec::Vec;

use super::{LpModel, RowKind, Sense, TOLERANCE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    /// `x_e` by edge id.
    pub x: Vec<f64>,
    /// `f_w` by path index.
    pub f: Vec<f64>,
    pub objective: f64,
    pub status: LpStatus,
    /// Pivots and bound flips over both passes.
    pub iterations: usize,
    /// Rows of the model present at the end.
    pub active_rows: usize,
    /// Largest row or bound violation of the returned point.
    pub max_violation: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimplexOptions {
    /// Total pivot limit; `None` scales with the model size.
    pub max_iterations: Option<usize>,
    /// Consecutive degenerate pivots before switching to smallest-index rules.
    pub degenerate_run: usize,
    /// Use smallest-index rules throughout.
    pub bland_only: bool,
    /// Start with every row instead of adding `f_w <= x_e` rows lazily.
    pub all_rows: bool,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        SimplexOptions {
            max_iterations: None,
            degenerate_run: 32,
            bland_only: false,
            all_rows: false,
        }
    }
}

const PIVOT_EPS: f64 = 1e-9;
const COST_EPS: f64 = 1e-9;
const PRIMAL_EPS: f64 = 1e-9;
const REFRESH_EVERY: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Basic,
    Lower,
    Upper,
}

enum Step {
    Done,
    Moved { degenerate: bool },
    Stuck(LpStatus),
}

struct Revised<'a> {
    model: &'a LpModel,
    /// Model row index of each local row.
    rows: Vec<usize>,
    /// Structural columns over the local rows, signed so every row is `<=`.
    columns: Vec<Vec<(usize, f64)>>,
    b: Vec<f64>,
    /// `B^-1`, column-major, `rows × rows`.
    binv: Vec<f64>,
    basis: Vec<usize>,
    /// Structural columns first, then one slack per local row.
    state: Vec<State>,
    beta: Vec<f64>,
    /// Simplex multipliers `c_B B^-1`.
    y: Vec<f64>,
    n: usize,
    alpha: Vec<f64>,
    /// Row `r` of `B^-1` during a dual step.
    rho: Vec<f64>,
    scratch: Vec<(usize, f64)>,
    support: Vec<usize>,
}

fn sign(sense: Sense) -> f64 {
    match sense {
        Sense::Le => 1.0,
        Sense::Ge => -1.0,
    }
}

impl<'a> Revised<'a> {
    fn new(model: &'a LpModel) -> Self {
        let n = model.num_columns();
        Revised {
            model,
            rows: Vec::new(),
            columns: vec![Vec::new(); n],
            b: Vec::new(),
            binv: Vec::new(),
            basis: Vec::new(),
            state: vec![State::Lower; n],
            beta: Vec::new(),
            y: Vec::new(),
            n,
            alpha: Vec::new(),
            rho: Vec::new(),
            scratch: Vec::new(),
            support: Vec::new(),
        }
    }

    fn size(&self) -> usize {
        self.rows.len()
    }

    /// Appends model rows with their slacks basic. With `B' = [B 0; a_B 1]`
    /// the new inverse rows are `[-a_B B^-1, 1]`; the multipliers of the new
    /// rows are zero.
    fn add_rows(&mut self, new: &[usize]) {
        let old = self.size();
        let size = old + new.len();
        let mut binv = vec![0.0; size * size];
        for k in 0..old {
            binv[k * size..k * size + old].copy_from_slice(&self.binv[k * old..(k + 1) * old]);
        }
        let mut position = vec![usize::MAX; self.n];
        for (i, &var) in self.basis.iter().enumerate() {
            if var < self.n {
                position[var] = i;
            }
        }
        for (offset, &k) in new.iter().enumerate() {
            let i = old + offset;
            let row = &self.model.rows()[k];
            let s = sign(row.sense);
            let mut activity = 0.0;
            for &(j, a) in &row.terms {
                let a = s * a;
                self.columns[j].push((i, a));
                match self.state[j] {
                    State::Basic => {
                        let p = position[j];
                        for c in 0..old {
                            binv[c * size + i] -= a * self.binv[c * old + p];
                        }
                        activity += a * self.beta[p];
                    }
                    State::Upper => activity += a,
                    State::Lower => {}
                }
            }
            binv[i * size + i] = 1.0;
            self.rows.push(k);
            self.b.push(s * row.rhs);
            self.basis.push(self.n + i);
            self.state.push(State::Basic);
            self.beta.push(s * row.rhs - activity);
            self.y.push(0.0);
        }
        self.binv = binv;
        self.alpha.resize(size, 0.0);
        self.rho.resize(size, 0.0);
    }

    fn upper(&self, j: usize) -> f64 {
        if j < self.n {
            1.0
        } else {
            f64::INFINITY
        }
    }

    fn value(&self, j: usize) -> f64 {
        match self.state[j] {
            State::Lower => 0.0,
            State::Upper => self.upper(j),
            State::Basic => unreachable!("basic values live in beta"),
        }
    }

    fn cost(&self, j: usize) -> f64 {
        if j < self.n {
            self.model.cost(j)
        } else {
            0.0
        }
    }

    /// Recomputes `beta = B^-1 (b - N y_N)` and the multipliers.
    fn refresh(&mut self) {
        let r = self.size();
        let mut rhs = self.b.clone();
        for j in 0..self.n {
            if self.state[j] == State::Upper {
                for &(i, a) in &self.columns[j] {
                    rhs[i] -= a;
                }
            }
        }
        self.beta.iter_mut().for_each(|v| *v = 0.0);
        for (k, &v) in rhs.iter().enumerate() {
            if v != 0.0 {
                let col = &self.binv[k * r..(k + 1) * r];
                for (bi, a) in self.beta.iter_mut().zip(col) {
                    *bi += v * a;
                }
            }
        }
        let costs: Vec<f64> = self.basis.iter().map(|&j| self.cost(j)).collect();
        for k in 0..r {
            let col = &self.binv[k * r..(k + 1) * r];
            self.y[k] = col.iter().zip(&costs).map(|(a, c)| a * c).sum();
        }
    }

    fn reduced_cost(&self, j: usize) -> f64 {
        if j < self.n {
            self.cost(j) - self.columns[j].iter().map(|&(i, a)| self.y[i] * a).sum::<f64>()
        } else {
            -self.y[j - self.n]
        }
    }

    fn load_row(&mut self, r: usize) {
        let size = self.size();
        for (k, v) in self.rho.iter_mut().enumerate() {
            *v = self.binv[k * size + r];
        }
    }

    /// Entry `(r, j)` of `B^-1 [A | I]`, with row `r` loaded into `rho`.
    fn row_entry(&self, j: usize) -> f64 {
        let rho = &self.rho;
        if j < self.n {
            self.columns[j].iter().map(|&(i, a)| rho[i] * a).sum()
        } else {
            rho[j - self.n]
        }
    }

    /// Fills `alpha` with `B^-1 a_q`.
    fn load_column(&mut self, q: usize) {
        let r = self.size();
        let alpha = &mut self.alpha;
        alpha.iter_mut().for_each(|v| *v = 0.0);
        if q < self.n {
            for &(k, a) in &self.columns[q] {
                let col = &self.binv[k * r..(k + 1) * r];
                for (v, b) in alpha.iter_mut().zip(col) {
                    *v += a * b;
                }
            }
        } else {
            let k = q - self.n;
            alpha.copy_from_slice(&self.binv[k * r..(k + 1) * r]);
        }
    }

    /// Moves the entering column `q` by `delta` and swaps it into row `r`,
    /// whose variable leaves at `leaving`. `alpha` must hold `B^-1 a_q`.
    fn exchange(&mut self, r: usize, q: usize, delta: f64, leaving: State) {
        for (v, &a) in self.beta.iter_mut().zip(&self.alpha) {
            if a != 0.0 {
                *v -= a * delta;
            }
        }
        let out = self.basis[r];
        self.state[out] = leaving;
        let entering_value = self.value(q) + delta;
        self.state[q] = State::Basic;

        let size = self.size();
        let p = self.alpha[r];
        let d = self.reduced_cost(q);
        let nz = &mut self.scratch;
        nz.clear();
        for k in 0..size {
            let v = &mut self.binv[k * size + r];
            if *v != 0.0 {
                *v /= p;
                nz.push((k, *v));
            }
        }
        let support = &mut self.support;
        support.clear();
        support.extend((0..size).filter(|&i| i != r && self.alpha[i] != 0.0));
        for &(k, v) in nz.iter() {
            let col = &mut self.binv[k * size..(k + 1) * size];
            for &i in support.iter() {
                col[i] -= self.alpha[i] * v;
            }
        }
        // y' = y + d_q · (row r of the new B^-1), with d_q from the old y.
        for &(k, v) in nz.iter() {
            self.y[k] += d * v;
        }
        self.basis[r] = q;
        self.beta[r] = entering_value;
    }

    fn primal_step(&mut self, bland: bool) -> Step {
        let mut best: Option<(usize, f64)> = None;
        for j in 0..self.state.len() {
            let gain = match self.state[j] {
                State::Basic => continue,
                State::Lower => -self.reduced_cost(j),
                State::Upper => self.reduced_cost(j),
            };
            if gain > COST_EPS && best.is_none_or(|(_, g)| !bland && gain > g) {
                best = Some((j, gain));
            }
        }
        let Some((q, _)) = best else {
            return Step::Done;
        };
        let dir = if self.state[q] == State::Lower { 1.0 } else { -1.0 };
        self.load_column(q);
        // Ratio test. The entering column may also just move to its other bound.
        let mut theta = self.upper(q);
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..self.size() {
            let a = dir * self.alpha[i];
            let var = self.basis[i];
            let step = if a > PIVOT_EPS {
                self.beta[i].max(0.0) / a
            } else if a < -PIVOT_EPS && var < self.n {
                (1.0 - self.beta[i]).max(0.0) / -a
            } else {
                continue;
            };
            let take = if step < theta - PIVOT_EPS {
                true
            } else if step <= theta + PIVOT_EPS {
                match leave {
                    // A blocking row wins a tie with the bound flip.
                    None => true,
                    Some((r, _)) if bland => var < self.basis[r],
                    Some((_, b)) => a.abs() > b.abs(),
                }
            } else {
                false
            };
            if take {
                theta = step;
                leave = Some((i, a));
            }
        }
        if theta.is_infinite() {
            return Step::Stuck(LpStatus::Unbounded);
        }
        match leave {
            None => {
                for (v, &a) in self.beta.iter_mut().zip(&self.alpha) {
                    if a != 0.0 {
                        *v -= dir * a * theta;
                    }
                }
                self.state[q] = if dir > 0.0 { State::Upper } else { State::Lower };
            }
            Some((r, a)) => {
                let leaving = if a > 0.0 { State::Lower } else { State::Upper };
                self.exchange(r, q, dir * theta, leaving);
            }
        }
        Step::Moved {
            degenerate: theta <= PIVOT_EPS,
        }
    }

    fn dual_step(&mut self, bland: bool) -> Step {
        // Leaving row: the basic variable furthest outside its bounds.
        let mut best: Option<(usize, f64)> = None;
        for i in 0..self.size() {
            let var = self.basis[i];
            let excess = (-self.beta[i]).max(self.beta[i] - self.upper(var));
            if excess > PRIMAL_EPS {
                let better = match best {
                    None => true,
                    Some((r, _)) if bland => var < self.basis[r],
                    Some((_, e)) => excess > e,
                };
                if better {
                    best = Some((i, excess));
                }
            }
        }
        let Some((r, _)) = best else {
            return Step::Done;
        };
        let raise = self.beta[r] < 0.0;
        self.load_row(r);
        // Entering column: keeps every reduced cost on its side of zero.
        let mut enter: Option<(usize, f64, f64)> = None;
        for j in 0..self.state.len() {
            let state = self.state[j];
            if state == State::Basic {
                continue;
            }
            let a = self.row_entry(j);
            let eligible = match (state, raise) {
                (State::Lower, true) | (State::Upper, false) => a < -PIVOT_EPS,
                _ => a > PIVOT_EPS,
            };
            if !eligible {
                continue;
            }
            let ratio = self.reduced_cost(j).abs() / a.abs();
            let take = match enter {
                None => true,
                Some((_, t, b)) => {
                    ratio < t - COST_EPS || (ratio <= t + COST_EPS && !bland && a.abs() > b.abs())
                }
            };
            if take {
                enter = Some((j, ratio, a));
            }
        }
        let Some((q, ratio, _)) = enter else {
            return Step::Stuck(LpStatus::Infeasible);
        };
        self.load_column(q);
        let (target, leaving) = if raise {
            (0.0, State::Lower)
        } else {
            (self.upper(self.basis[r]), State::Upper)
        };
        let delta = (self.beta[r] - target) / self.alpha[r];
        self.exchange(r, q, delta, leaving);
        Step::Moved {
            degenerate: ratio <= COST_EPS,
        }
    }

    /// Runs one pass until it reports `Done`, refreshing periodically and
    /// once more before accepting `Done`.
    fn run(
        &mut self,
        dual: bool,
        options: &SimplexOptions,
        iterations: &mut usize,
        limit: usize,
    ) -> Option<LpStatus> {
        let mut degenerate = 0usize;
        let mut fresh = false;
        loop {
            let bland = options.bland_only || degenerate >= options.degenerate_run;
            if *iterations == limit {
                return Some(LpStatus::IterationLimit);
            }
            let step = if dual {
                self.dual_step(bland)
            } else {
                self.primal_step(bland)
            };
            match step {
                Step::Done if fresh => return None,
                Step::Done => {
                    self.refresh();
                    fresh = true;
                }
                Step::Stuck(status) => return Some(status),
                Step::Moved { degenerate: d } => {
                    *iterations += 1;
                    degenerate = if d { degenerate + 1 } else { 0 };
                    fresh = false;
                    if (*iterations).is_multiple_of(REFRESH_EVERY) {
                        self.refresh();
                        fresh = true;
                    }
                }
            }
        }
    }

    fn values(&self) -> Vec<f64> {
        let mut values = vec![0.0; self.n];
        for (j, v) in values.iter_mut().enumerate() {
            if self.state[j] != State::Basic {
                *v = self.value(j);
            }
        }
        for (i, &var) in self.basis.iter().enumerate() {
            if var < self.n {
                values[var] = self.beta[i];
            }
        }
        // Snap solver noise back into the bounds.
        for v in values.iter_mut() {
            if *v < 0.0 && *v > -TOLERANCE {
                *v = 0.0;
            } else if *v > 1.0 && *v < 1.0 + TOLERANCE {
                *v = 1.0;
            }
        }
        values
    }
}

pub fn solve_lp(model: &LpModel) -> LpSolution {
    solve_lp_with(model, SimplexOptions::default())
}

pub fn solve_lp_with(model: &LpModel, options: SimplexOptions) -> LpSolution {
    let all = model.rows();
    let initial: Vec<usize> = (0..all.len())
        .filter(|&k| {
            options.all_rows
                || match all[k].kind {
                    RowKind::PathEdge { path, .. } => model.paths()[path].len() <= 2,
                    _ => true,
                }
        })
        .collect();
    let limit = options
        .max_iterations
        .unwrap_or(50 * (all.len() + model.num_columns()) + 1000);
    let mut lp = Revised::new(model);
    lp.add_rows(&initial);
    let mut active = vec![false; all.len()];
    initial.iter().for_each(|&k| active[k] = true);
    let mut iterations = 0usize;
    loop {
        let stuck = lp
            .run(true, &options, &mut iterations, limit)
            .or_else(|| lp.run(false, &options, &mut iterations, limit));
        let values = lp.values();
        if let Some(status) = stuck {
            return finish(model, values, status, iterations, lp.size());
        }
        let violated: Vec<usize> = (0..all.len())
            .filter(|&k| !active[k] && all[k].violation(&values) > PRIMAL_EPS)
            .collect();
        if violated.is_empty() {
            return finish(model, values, LpStatus::Optimal, iterations, lp.size());
        }
        violated.iter().for_each(|&k| active[k] = true);
        lp.add_rows(&violated);
    }
}

fn finish(model: &LpModel, values: Vec<f64>, status: LpStatus, iterations: usize, active_rows: usize) -> LpSolution {
    let m = model.num_edges();
    let objective = values[..m].iter().sum();
    let max_violation = model.max_violation(&values);
    LpSolution {
        f: values[m..].to_vec(),
        x: values[..m].to_vec(),
        objective,
        status,
        iterations,
        active_rows,
        max_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::builtin;
    use crate::lp::build_lp;
    use crate::{Graph, ProportionFunction};

    fn pf(s: &str) -> ProportionFunction {
        ProportionFunction::parse(s).unwrap()
    }

    #[test]
    fn single_edge_is_forced() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let sol = solve_lp(&build_lp(&g, &pf("1")).unwrap());
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] - 1.0).abs() <= 1e-7);
        assert!((sol.objective - 1.0).abs() <= 1e-7);
    }

    #[test]
    fn triangle_full_proportion() {
        let g = builtin("triangle").unwrap();
        let sol = solve_lp(&build_lp(&g, &pf("1")).unwrap());
        assert_eq!(sol.status, LpStatus::Optimal);
        for x in &sol.x {
            assert!((x - 1.0).abs() <= 1e-7);
        }
        assert!((sol.objective - 3.0).abs() <= 1e-7);
    }

    #[test]
    fn triangle_spanner_is_bracketed() {
        let g = builtin("triangle").unwrap();
        let sol = solve_lp(&build_lp(&g, &pf("0,1")).unwrap());
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!(sol.objective <= 2.0 + 1e-7 && sol.objective >= 0.0);
        assert!(sol.max_violation <= 1e-7);
    }

    #[test]
    fn zero_proportion_removes_everything() {
        let g = builtin("diamond").unwrap();
        let sol = solve_lp(&build_lp(&g, &pf("0,0")).unwrap());
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!(sol.objective.abs() <= 1e-7);
    }

    #[test]
    fn bland_and_dantzig_agree() {
        let g = crate::gen::gen_gnm(9, 18, 3).unwrap();
        let model = build_lp(&g, &pf("1/2,1")).unwrap();
        let a = solve_lp(&model);
        let b = solve_lp_with(&model, SimplexOptions { bland_only: true, ..Default::default() });
        assert_eq!((a.status, b.status), (LpStatus::Optimal, LpStatus::Optimal));
        assert!((a.objective - b.objective).abs() <= 1e-6);
    }

    #[test]
    fn lazy_rows_match_the_full_model() {
        for seed in 0..4 {
            let g = crate::gen::gen_gnm(10, 20, seed).unwrap();
            let model = build_lp(&g, &pf("0,1/2,1")).unwrap();
            let lazy = solve_lp(&model);
            let full = solve_lp_with(&model, SimplexOptions { all_rows: true, ..Default::default() });
            assert_eq!((lazy.status, full.status), (LpStatus::Optimal, LpStatus::Optimal));
            assert!((lazy.objective - full.objective).abs() <= 1e-6);
            assert!(lazy.max_violation <= 1e-7 && full.max_violation <= 1e-7);
            assert!(lazy.active_rows <= full.active_rows);
        }
    }

    #[test]
    fn iteration_limit_is_reported() {
        let g = crate::gen::gen_gnm(9, 18, 3).unwrap();
        let model = build_lp(&g, &pf("1/2,1")).unwrap();
        let sol = solve_lp_with(&model, SimplexOptions { max_iterations: Some(1), ..Default::default() });
        assert_eq!(sol.status, LpStatus::IterationLimit);
    }
}
