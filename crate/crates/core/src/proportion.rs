//! Proportion functions `p(1..t)` with exact rational thresholds.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub type Ratio = num_rational::Ratio<u64>;

/// Monotone non-decreasing proportions `p(1) <= ... <= p(t)` in `[0, 1]`.
///
/// `t` is the length of the sequence; `p(x) = p(t)` for every `x > t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProportionFunction {
    props: Vec<Ratio>,
}

impl ProportionFunction {
    pub fn new(props: Vec<Ratio>) -> Result<Self> {
        if props.is_empty() {
            return Err(Error::InvalidProportion("at least one level is required".to_string()));
        }
        for (i, p) in props.iter().enumerate() {
            if *p > Ratio::from_integer(1) {
                return Err(Error::InvalidProportion(format!(
                    "p({}) = {} is outside [0, 1]",
                    i + 1,
                    p
                )));
            }
        }
        for (i, w) in props.windows(2).enumerate() {
            if w[0] > w[1] {
                return Err(Error::InvalidProportion(format!(
                    "p({}) = {} exceeds p({}) = {}; proportions must be non-decreasing",
                    i + 1,
                    w[0],
                    i + 2,
                    w[1]
                )));
            }
        }
        Ok(ProportionFunction { props })
    }

    /// Parses a comma-separated list such as `"0.5,1"` or `"1/2, 1"`.
    pub fn parse(list: &str) -> Result<Self> {
        let props = list
            .split(',')
            .map(|tok| parse_ratio(tok.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(props)
    }

    /// The shifted unit step: `p(i) = 0` for `i < t` and `p(t) = 1`.
    pub fn spanner(t: usize) -> Self {
        assert!(t >= 1);
        let mut props = alloc::vec![Ratio::from_integer(0); t];
        props[t - 1] = Ratio::from_integer(1);
        ProportionFunction { props }
    }

    #[inline]
    pub fn t(&self) -> usize {
        self.props.len()
    }

    /// `p(level)` for `level >= 1`, clamped to `p(t)` beyond `t`.
    pub fn p(&self, level: usize) -> Ratio {
        assert!(level >= 1, "hop levels start at 1");
        self.props[(level - 1).min(self.props.len() - 1)]
    }

    pub fn levels(&self) -> &[Ratio] {
        &self.props
    }

    /// Whether `reached >= p(level) * degree`, compared exactly.
    #[inline]
    pub fn satisfied(&self, level: usize, reached: usize, degree: usize) -> bool {
        let p = self.p(level);
        (reached as u128) * (*p.denom() as u128) >= (*p.numer() as u128) * (degree as u128)
    }

    /// `p(level) * degree` as an exact rational.
    pub fn threshold(&self, level: usize, degree: usize) -> Ratio {
        self.p(level) * Ratio::from_integer(degree as u64)
    }
}

impl fmt::Debug for ProportionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProportionFunction({})", self)
    }
}

/// Comma-separated list of the levels, e.g. `0,1/2`.
impl fmt::Display for ProportionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.props.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

/// Parses `"3/4"`, `"0.75"`, `".75"` or `"1"` into an exact ratio.
pub fn parse_ratio(tok: &str) -> Result<Ratio> {
    let bad = || Error::InvalidProportion(format!("cannot parse {:?} as a proportion", tok));
    if let Some((num, den)) = tok.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    let (int, frac) = tok.split_once('.').unwrap_or((tok, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !digits(int) || !digits(frac) || frac.len() > 18 {
        return Err(bad());
    }
    let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let den = 10u64.pow(frac.len() as u32);
    let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let num = int
        .checked_mul(den)
        .and_then(|x| x.checked_add(frac))
        .ok_or_else(bad)?;
    Ok(Ratio::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn decimals_and_fractions_agree() {
        assert_eq!(parse_ratio("0.5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_ratio("1/2").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_ratio(".25").unwrap(), Ratio::new(1, 4));
        assert_eq!(parse_ratio("1").unwrap(), Ratio::from_integer(1));
        assert_eq!(parse_ratio("0.30").unwrap(), Ratio::new(3, 10));
        for bad in ["", ".", "a", "1/0", "-0.5", "0.5.1", "1e-3"] {
            assert!(parse_ratio(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn rejects_non_monotone_and_out_of_range() {
        assert!(ProportionFunction::parse("0.9,0.5").is_err());
        assert!(ProportionFunction::parse("1.5").is_err());
        assert!(ProportionFunction::parse("").is_err());
        assert!(ProportionFunction::parse("0,0.5,0.5,1").is_ok());
    }

    #[test]
    fn clamps_beyond_t() {
        let pf = ProportionFunction::parse("0.2,0.7").unwrap();
        assert_eq!(pf.t(), 2);
        assert_eq!(pf.p(5), Ratio::new(7, 10));
    }

    #[test]
    fn exact_threshold_at_half_integer() {
        // p * deg = 1.5: one reached neighbor fails, two pass.
        let pf = ProportionFunction::new(vec![Ratio::new(1, 2)]).unwrap();
        assert!(!pf.satisfied(1, 1, 3));
        assert!(pf.satisfied(1, 2, 3));
        assert!(pf.satisfied(1, 0, 0));
        assert_eq!(pf.threshold(1, 3), Ratio::new(3, 2));
    }

    #[test]
    fn spanner_step() {
        let pf = ProportionFunction::spanner(3);
        assert_eq!(pf.to_string(), "0,0,1");
    }
}
