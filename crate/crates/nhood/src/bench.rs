//! The ordering comparison: every strategy on every instance of a `G(n,m)`
//! family, each output verified, means per strategy.

use std::fmt::Write;

use nhood_core::gen::FamilySpec;
use nhood_core::{ProportionFunction, SaParams};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::parallel::with_pool;
use crate::strategy::{run_verified, Strategy};

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: FamilySpec,
    pub pf: ProportionFunction,
    pub strategies: Vec<Strategy>,
    /// Iterations, temperature and cooling for SA; the seed is per instance.
    pub sa: SaParams,
    pub jobs: usize,
    /// Record wall times. Without them the report is a pure function of the
    /// configuration.
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Dataset {
    pub model: &'static str,
    pub n: usize,
    pub m: usize,
    pub count: usize,
    pub base_seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrategySummary {
    pub strategy: Strategy,
    pub mean_ec: f64,
    /// `None` when timing is disabled.
    pub mean_seconds: Option<f64>,
    pub trials: usize,
    /// Instance seeds; seeded strategies also use them for their own RNG.
    pub seed_list: Vec<u64>,
    pub min_ec: usize,
    pub max_ec: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub dataset: Dataset,
    pub p: String,
    pub t: usize,
    pub strategies: Vec<StrategySummary>,
}

impl BenchReport {
    pub fn summary(&self, strategy: Strategy) -> Option<&StrategySummary> {
        self.strategies.iter().find(|s| s.strategy == strategy)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let d = &self.dataset;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} x G({},{}), seeds {}..{}, p = {} (t = {})",
            d.count,
            d.n,
            d.m,
            d.base_seed,
            d.base_seed.wrapping_add(d.count as u64 - 1),
            self.p,
            self.t
        );
        let _ = writeln!(out, "{:<8} {:>10} {:>8} {:>8} {:>14} {:>7}", "strategy", "mean |E_c|", "min", "max", "mean time (s)", "trials");
        for s in &self.strategies {
            let time = s.mean_seconds.map_or_else(|| "-".to_string(), |t| format!("{t:.6}"));
            let _ = writeln!(
                out,
                "{:<8} {:>10.2} {:>8} {:>8} {:>14} {:>7}",
                s.strategy.as_str(),
                s.mean_ec,
                s.min_ec,
                s.max_ec,
                time,
                s.trials
            );
        }
        out
    }
}

/// Runs the comparison. The first invalid output aborts the run with
/// [`CliError::Internal`](crate::CliError::Internal).
pub fn bench_orderings(config: &BenchConfig) -> Result<BenchReport> {
    let family = config.family;
    let per_instance: Vec<Vec<(usize, f64)>> = with_pool(config.jobs, || {
        (0..family.count)
            .into_par_iter()
            .map(|i| {
                let g = family.instance(i);
                let seed = family.seed(i);
                config
                    .strategies
                    .iter()
                    .map(|&s| run_verified(&g, &config.pf, s, seed, &config.sa).map(|r| (r.kept_count(), r.seconds)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
    })??;

    let seeds: Vec<u64> = (0..family.count).map(|i| family.seed(i)).collect();
    let trials = family.count;
    let strategies = config
        .strategies
        .iter()
        .enumerate()
        .map(|(k, &strategy)| {
            let kept: Vec<usize> = per_instance.iter().map(|row| row[k].0).collect();
            let seconds: f64 = per_instance.iter().map(|row| row[k].1).sum();
            StrategySummary {
                strategy,
                mean_ec: kept.iter().sum::<usize>() as f64 / trials as f64,
                mean_seconds: config.timing.then(|| seconds / trials as f64),
                trials,
                seed_list: seeds.clone(),
                min_ec: kept.iter().copied().min().unwrap_or(0),
                max_ec: kept.iter().copied().max().unwrap_or(0),
            }
        })
        .collect();
    Ok(BenchReport {
        dataset: Dataset {
            model: "G(n,m)",
            n: family.n,
            m: family.m,
            count: family.count,
            base_seed: family.base_seed,
        },
        p: config.pf.to_string(),
        t: config.pf.t(),
        strategies,
    })
}
