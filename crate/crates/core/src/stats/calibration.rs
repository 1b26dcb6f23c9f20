use serde::{Deserialize, Serialize};
use statrs::distribution::{Binomial, DiscreteCDF};

use crate::error::{Error, Result};

/// Central binomial acceptance band for a rejection count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialBand {
    pub lower: u64,
    pub upper: u64,
}

impl BinomialBand {
    pub fn contains(&self, count: u64) -> bool {
        (self.lower..=self.upper).contains(&count)
    }
}

/// Exact quantile band `[q(δ/2), q(1 - δ/2)]` of `Binomial(n_runs, alpha)`
/// with `δ = 1 - level`, where `q(u)` is the smallest `k` with `F(k) >= u`.
pub fn binomial_band(n_runs: u64, alpha: f64, level: f64) -> Result<BinomialBand> {
    if !(0.0..1.0).contains(&level) || level <= 0.0 {
        return Err(Error::domain(format!("band level {level} must lie in (0, 1)")));
    }
    let dist = Binomial::new(alpha, n_runs).map_err(|e| Error::domain(e.to_string()))?;
    let tail = 0.5 * (1.0 - level);
    let quantile = |u: f64| (0..=n_runs).find(|k| dist.cdf(*k) >= u).unwrap_or(n_runs);
    Ok(BinomialBand { lower: quantile(tail), upper: quantile(1.0 - tail) })
}
