//! Compression ratio across a list of proportion functions on one graph.

use std::fmt::Write;

use nhood_core::eval::compression_ratio;
use nhood_core::{Graph, ProportionFunction, SaParams};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::strategy::{run_verified, Strategy};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepPoint {
    pub p: String,
    pub t: usize,
    pub kept: usize,
    /// Deleted-edge fraction.
    pub ratio: f64,
    pub ratio_exact: String,
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub strategy: Strategy,
    pub seed: u64,
    pub points: Vec<SweepPoint>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: {} vertices, {} edges, strategy {}, seed {}",
            self.input, self.n, self.m, self.strategy, self.seed
        );
        let _ = writeln!(out, "{:<20} {:>3} {:>8} {:>8} {:>12}", "p", "t", "|E_c|", "ratio", "time (s)");
        for pt in &self.points {
            let time = pt.seconds.map_or_else(|| "-".to_string(), |t| format!("{t:.6}"));
            let _ = writeln!(out, "{:<20} {:>3} {:>8} {:>8.4} {:>12}", pt.p, pt.t, pt.kept, pt.ratio, time);
        }
        out
    }
}

/// The t-spanner proportions `(0,..,0,1)` for `t = 1..=max_t`.
pub fn spanner_series(max_t: usize) -> Vec<ProportionFunction> {
    (1..=max_t).map(ProportionFunction::spanner).collect()
}

pub struct SweepConfig<'a> {
    pub input: &'a str,
    pub strategy: Strategy,
    pub seed: u64,
    pub sa: SaParams,
    pub timing: bool,
}

pub fn sweep(g: &Graph, pfs: &[ProportionFunction], config: &SweepConfig<'_>) -> Result<SweepReport> {
    if g.m() == 0 {
        return Err(CliError::Config(format!("{}: graph has no edges", config.input)));
    }
    let points = pfs
        .iter()
        .map(|pf| {
            let result = run_verified(g, pf, config.strategy, config.seed, &config.sa)?;
            let ratio = compression_ratio(g, &result.to_graph()).map_err(|e| CliError::Internal(e.to_string()))?;
            Ok(SweepPoint {
                p: pf.to_string(),
                t: pf.t(),
                kept: result.kept_count(),
                ratio: *ratio.numer() as f64 / *ratio.denom() as f64,
                ratio_exact: ratio.to_string(),
                seconds: config.timing.then_some(result.seconds),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        input: config.input.to_string(),
        n: g.n(),
        m: g.m(),
        strategy: config.strategy,
        seed: config.seed,
        points,
    })
}
