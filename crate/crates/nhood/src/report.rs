//! Structured output of `compress` and the histogram table of `eval`.

use std::collections::BTreeSet;
use std::fmt::Write;

use nhood_core::eval::SpHistogram;
use nhood_core::{CompressionResult, Ratio};
use serde::Serialize;

use crate::strategy::Strategy;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompressReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub kept: usize,
    pub ratio: f64,
    pub ratio_exact: String,
    pub p: String,
    pub t: usize,
    pub strategy: Strategy,
    /// Present for seeded strategies.
    pub seed: Option<u64>,
    pub seconds: Option<f64>,
    pub verified: bool,
}

impl CompressReport {
    pub fn new(input: &str, result: &CompressionResult, strategy: Strategy, seed: u64, timing: bool) -> Self {
        let ratio = if result.m == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new((result.m - result.kept_count()) as u64, result.m as u64)
        };
        CompressReport {
            input: input.to_string(),
            n: result.n,
            m: result.m,
            kept: result.kept_count(),
            ratio: *ratio.numer() as f64 / *ratio.denom() as f64,
            ratio_exact: ratio.to_string(),
            p: result.pf.to_string(),
            t: result.pf.t(),
            strategy,
            seed: strategy.is_seeded().then_some(seed),
            seconds: timing.then_some(result.seconds),
            verified: true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: kept {} of {} edges (ratio {:.4}), strategy {}, p = {}",
            self.input, self.kept, self.m, self.ratio, self.strategy, self.p
        )
    }
}

/// Two histograms side by side, one row per distance.
pub fn histogram_table(left: &SpHistogram, right: &SpHistogram) -> String {
    let lengths: BTreeSet<u32> = left.counts.keys().chain(right.counts.keys()).copied().collect();
    let mut out = String::new();
    let _ = writeln!(out, "{:>8} {:>12} {:>12}", "length", "original", "compressed");
    for l in lengths {
        let a = left.counts.get(&l).copied().unwrap_or(0);
        let b = right.counts.get(&l).copied().unwrap_or(0);
        let _ = writeln!(out, "{l:>8} {a:>12} {b:>12}");
    }
    let _ = writeln!(out, "{:>8} {:>12} {:>12}", "none", left.disconnected, right.disconnected);
    out
}
