//! Simulated annealing over edge orders.
//!
//! The state is an edge order and its cost is the number of edges the basic
//! scan keeps. Each iteration swaps two positions, re-runs the scan, accepts
//! strict improvements, and otherwise accepts with probability
//! `exp((C_S - C_new) / T)`. The temperature cools geometrically.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::{rng, EdgeOrdering, OrderingKind};
use crate::compress::{compress_basic, CompressionResult, Scanner};
use crate::graph::{Edge, Graph};
use crate::{Error, ProportionFunction, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaParams {
    pub iterations: usize,
    pub initial_temperature: f64,
    /// Cooling factor, `T <- cooling * T` after every iteration.
    pub cooling: f64,
    pub seed: u64,
}

impl Default for SaParams {
    fn default() -> Self {
        SaParams {
            iterations: 1000,
            initial_temperature: 10.0,
            cooling: 0.99,
            seed: 0,
        }
    }
}

impl SaParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.initial_temperature > 0.0 && self.initial_temperature.is_finite()) {
            return Err(Error::InvalidSaParams(format!(
                "initial temperature must be positive, got {}",
                self.initial_temperature
            )));
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return Err(Error::InvalidSaParams(format!(
                "cooling factor must lie in (0, 1), got {}",
                self.cooling
            )));
        }
        Ok(())
    }
}

/// Outcome of the annealing search.
#[derive(Clone, Debug)]
pub struct SaSearch {
    pub best_order: EdgeOrdering,
    pub best_cost: usize,
    /// Cost of the scan under the initial random order.
    pub initial_cost: usize,
    /// Number of perturbations that replaced the current state.
    pub accepted: usize,
}

pub fn sa_search(g: &Graph, pf: &ProportionFunction, params: &SaParams) -> Result<SaSearch> {
    params.validate()?;
    let mut rng = rng(params.seed);
    let mut current: Vec<Edge> = g.edges().to_vec();
    rand::seq::SliceRandom::shuffle(current.as_mut_slice(), &mut rng);

    let mut scanner = Scanner::new(g.n());
    let mut cost = |order: &[Edge]| scanner.scan(pf, order.iter().copied(), |_| {});

    let initial_cost = cost(&current);
    let mut current_cost = initial_cost;
    let mut best = current.clone();
    let mut best_cost = initial_cost;
    let mut temperature = params.initial_temperature;
    let mut candidate = current.clone();
    let mut accepted = 0;
    let m = current.len();

    for _ in 0..params.iterations {
        candidate.copy_from_slice(&current);
        if m >= 2 {
            let i = rng.gen_range(0..m);
            let mut j = rng.gen_range(0..m - 1);
            if j >= i {
                j += 1;
            }
            candidate.swap(i, j);
        }
        let c = cost(&candidate);
        if c < best_cost {
            best.copy_from_slice(&candidate);
            best_cost = c;
        }
        let accept = if c < current_cost {
            true
        } else {
            let r: f64 = rng.gen();
            // The exponent is never positive here.
            libm::exp((current_cost as f64 - c as f64) / temperature) > r
        };
        if accept {
            core::mem::swap(&mut current, &mut candidate);
            current_cost = c;
            accepted += 1;
        }
        temperature *= params.cooling;
    }

    Ok(SaSearch {
        best_order: EdgeOrdering::new(best, OrderingKind::Sa, Some(params.seed)),
        best_cost,
        initial_cost,
        accepted,
    })
}

/// Runs [`sa_search`] and compresses under the best order found.
pub fn sa_compress(
    g: &Graph,
    pf: &ProportionFunction,
    params: &SaParams,
) -> Result<CompressionResult> {
    let search = sa_search(g, pf, params)?;
    let result = compress_basic(g, pf, &search.best_order)?;
    debug_assert_eq!(result.kept_count(), search.best_cost);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::builtin;
    use crate::ordering::random_order;

    fn pf(s: &str) -> ProportionFunction {
        ProportionFunction::parse(s).unwrap()
    }

    #[test]
    fn zero_iterations_is_the_initial_order() {
        let g = builtin("zachary").unwrap();
        let params = SaParams {
            iterations: 0,
            seed: 11,
            ..SaParams::default()
        };
        let p = pf("1/2,1");
        let sa = sa_compress(&g, &p, &params).unwrap();
        let basic = compress_basic(&g, &p, &random_order(&g, 11)).unwrap();
        assert_eq!(sa.kept, basic.kept);
    }

    #[test]
    fn triangle_reaches_two() {
        let g = builtin("triangle").unwrap();
        let params = SaParams {
            iterations: 50,
            ..SaParams::default()
        };
        assert_eq!(sa_compress(&g, &pf("0,1"), &params).unwrap().kept_count(), 2);
    }

    #[test]
    fn diamond_reaches_three() {
        let g = builtin("diamond").unwrap();
        for seed in 0..5 {
            let params = SaParams {
                seed,
                ..SaParams::default()
            };
            assert_eq!(sa_compress(&g, &pf("1/2,1"), &params).unwrap().kept_count(), 3);
        }
    }

    #[test]
    fn never_worse_than_start() {
        let g = builtin("zachary").unwrap();
        let params = SaParams {
            iterations: 100,
            seed: 4,
            ..SaParams::default()
        };
        let s = sa_search(&g, &pf("1/2,1"), &params).unwrap();
        assert!(s.best_cost <= s.initial_cost);
    }

    #[test]
    fn single_edge_skips_perturbation() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let r = sa_compress(&g, &pf("0,1"), &SaParams::default()).unwrap();
        assert_eq!(r.kept_count(), 1);
    }

    #[test]
    fn rejects_bad_params() {
        let g = builtin("triangle").unwrap();
        for params in [
            SaParams { cooling: 1.0, ..SaParams::default() },
            SaParams { cooling: 0.0, ..SaParams::default() },
            SaParams { initial_temperature: 0.0, ..SaParams::default() },
            SaParams { initial_temperature: f64::NAN, ..SaParams::default() },
        ] {
            assert!(matches!(sa_compress(&g, &pf("1"), &params), Err(Error::InvalidSaParams(_))));
        }
    }
}
