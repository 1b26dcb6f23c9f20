use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `n × d` real observations, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleMatrix {
    n: usize,
    d: usize,
    entries: Vec<f64>,
}

impl SampleMatrix {
    pub fn new(n: usize, d: usize, entries: Vec<f64>) -> Result<Self> {
        if n < 2 || d == 0 {
            return Err(Error::domain(format!("sample matrix needs n >= 2 and d >= 1, got {n}×{d}")));
        }
        if entries.len() != n * d {
            return Err(Error::domain(format!("{} entries for a {n}×{d} matrix", entries.len())));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("sample matrix has non-finite entries"));
        }
        Ok(Self { n, d, entries })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let d = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != d) {
            return Err(Error::domain("rows have different lengths"));
        }
        Self::new(rows.len(), d, rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect())
    }

    /// One-column matrix.
    pub fn column(values: &[f64]) -> Result<Self> {
        Self::new(values.len(), 1, values.to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.d..(i + 1) * self.d]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Outcome of a hypothesis test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub test_name: String,
    pub statistic: f64,
    pub p_value: f64,
    /// `None` for asymptotic p-values.
    pub n_permutations: Option<usize>,
    pub alpha: f64,
    pub reject: bool,
    pub seed: Option<u64>,
    #[serde(default)]
    pub metadata: BTreeMap<String, serde_json::Value>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

/// Level used when a test is run without an explicit `alpha`.
pub const DEFAULT_ALPHA: f64 = 0.05;

impl TestReport {
    pub(crate) fn new(test_name: &str, statistic: f64, p_value: f64, n_permutations: Option<usize>) -> Self {
        let p_value = p_value.clamp(0.0, 1.0);
        Self {
            test_name: test_name.to_string(),
            statistic,
            p_value,
            n_permutations,
            alpha: DEFAULT_ALPHA,
            reject: p_value <= DEFAULT_ALPHA,
            seed: None,
            metadata: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    /// Re-decides at level `alpha` (rejection iff `p <= alpha`).
    pub fn at_level(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self.reject = self.p_value <= alpha;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_meta(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).unwrap_or(serde_json::Value::Null);
        self.metadata.insert(key.to_string(), v);
        self
    }
}
