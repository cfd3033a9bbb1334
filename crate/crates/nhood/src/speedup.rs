//! Timing of all-pairs BFS on the original and the compressed graph.

use std::time::Instant;

use nhood_core::eval::{sp_histogram, SpHistogram};
use nhood_core::Graph;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpeedupReport {
    pub repeats: usize,
    /// Fastest of `repeats` runs, in seconds.
    pub seconds_original: f64,
    pub seconds_compressed: f64,
    /// `seconds_original / seconds_compressed`.
    pub speedup: f64,
}

fn fastest(g: &Graph, repeats: usize) -> (f64, SpHistogram) {
    let mut best = f64::INFINITY;
    let mut hist = SpHistogram::default();
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        hist = sp_histogram(g);
        best = best.min(start.elapsed().as_secs_f64());
    }
    (best, hist)
}

/// Runs the all-pairs BFS histogram `repeats` times on each graph and keeps
/// the fastest run of each.
pub fn apsp_speedup(g: &Graph, gc: &Graph, repeats: usize) -> (SpeedupReport, SpHistogram, SpHistogram) {
    let (t_g, h_g) = fastest(g, repeats);
    let (t_gc, h_gc) = fastest(gc, repeats);
    let report = SpeedupReport {
        repeats: repeats.max(1),
        seconds_original: t_g,
        seconds_compressed: t_gc,
        speedup: if t_gc > 0.0 { t_g / t_gc } else { f64::INFINITY },
    };
    (report, h_g, h_gc)
}
