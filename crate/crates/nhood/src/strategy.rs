//! Runs one compression strategy with timing and a soundness check.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use nhood_core::lp::lp_order;
use nhood_core::ordering::{ec_order, random_order, sa_compress};
use nhood_core::{compress_basic, verify, CompressionResult, Error, Graph, ProportionFunction, SaParams};
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// The basic scan under a seeded random order.
    Basic,
    Lp,
    Ec,
    Sa,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Basic, Strategy::Lp, Strategy::Ec, Strategy::Sa];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Basic => "basic",
            Strategy::Lp => "lp",
            Strategy::Ec => "ec",
            Strategy::Sa => "sa",
        }
    }

    /// Whether the seed influences the output.
    pub fn is_seeded(self) -> bool {
        matches!(self, Strategy::Basic | Strategy::Sa)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" | "random" | "basic-random" => Ok(Strategy::Basic),
            "lp" => Ok(Strategy::Lp),
            "ec" => Ok(Strategy::Ec),
            "sa" => Ok(Strategy::Sa),
            other => Err(CliError::Config(format!(
                "unknown strategy {other:?} (expected basic, lp, ec or sa)"
            ))),
        }
    }
}

/// Parses a comma-separated strategy list such as `basic,ec,sa`.
pub fn parse_strategies(list: &str) -> Result<Vec<Strategy>> {
    let mut out: Vec<Strategy> = Vec::new();
    for s in list.split(',').filter(|s| !s.trim().is_empty()) {
        let s: Strategy = s.trim().parse()?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    if out.is_empty() {
        return Err(CliError::Config("empty strategy list".into()));
    }
    Ok(out)
}

fn strategy_error(err: Error) -> CliError {
    match err {
        Error::LpNotOptimal(_) | Error::LpWitness { .. } => CliError::Internal(err.to_string()),
        other => CliError::Config(other.to_string()),
    }
}

/// Compresses `g` and fills in the wall time. `seed` drives the random
/// order and the annealing search; `sa` supplies the other SA parameters.
pub fn run_strategy(
    g: &Graph,
    pf: &ProportionFunction,
    strategy: Strategy,
    seed: u64,
    sa: &SaParams,
) -> Result<CompressionResult> {
    let start = Instant::now();
    let mut result = match strategy {
        Strategy::Basic => compress_basic(g, pf, &random_order(g, seed)),
        Strategy::Ec => compress_basic(g, pf, &ec_order(g, pf.t())),
        Strategy::Lp => lp_order(g, pf).and_then(|order| compress_basic(g, pf, &order)),
        Strategy::Sa => sa_compress(g, pf, &SaParams { seed, ..*sa }),
    }
    .map_err(strategy_error)?;
    result.seconds = start.elapsed().as_secs_f64();
    Ok(result)
}

/// [`run_strategy`] followed by an independent verification of the output.
/// A failing check is a bug and maps to [`CliError::Internal`].
pub fn run_verified(
    g: &Graph,
    pf: &ProportionFunction,
    strategy: Strategy,
    seed: u64,
    sa: &SaParams,
) -> Result<CompressionResult> {
    let result = run_strategy(g, pf, strategy, seed, sa)?;
    let report = verify(g, &result.to_graph(), pf).map_err(|e| CliError::Internal(e.to_string()))?;
    if let Some(v) = report.violations.first() {
        return Err(CliError::Internal(format!(
            "{strategy} produced an invalid compression: vertex {} reaches {} neighbors within {} hops, needs {}",
            v.vertex, v.achieved, v.level, v.required
        )));
    }
    Ok(result)
}
