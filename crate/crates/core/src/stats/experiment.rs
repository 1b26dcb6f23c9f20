//! Seeded experiments contrasting Gaussian and non-Gaussian coefficient laws.
//!
//! Every experiment is a pure function of its configuration (seed included).
//! Realization `r` draws from the stream `(seed, Realization, r)`; the second
//! batch of the invariance experiment uses `(seed, RealizationB, r)`.

use std::f64::consts::PI;

use nalgebra::DVector;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::calibration::{binomial_band, BinomialBand};
use super::dcov::independence_test;
use super::energy::energy_two_sample;
use super::jb::jarque_bera;
use super::sample::{SampleMatrix, TestReport};
use crate::error::{Error, Result};
use crate::field::{
    evaluate_torus, sample_block, sample_coefficients, sample_torus_coefficients, AngularPowerSpectrum,
    CoefficientLaw, HarmonicCoefficients,
};
use crate::repr::assumption::order_pairs;
use crate::repr::{check_assumption, rep_matrix_phi_basis, search_witness, EulerRotation, PhiTable};
use crate::rng::{run_seed, stream, Domain};
use crate::rotation::{rotate_point, rotate_torus_coeffs, SpherePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Sphere,
    Torus,
}

/// Group element used by an experiment: an explicit rotation, or a search for
/// one satisfying the witness condition on the selected orders.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RotationSpec {
    Search,
    Euler(EulerRotation),
}

/// Which pair of rotated coefficients to test. `Sweep` tests every pair
/// `1 <= m₁ < m₂ <= degree` and reports the Bonferroni-adjusted minimum p-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderSelection {
    Pair(i64, i64),
    Sweep,
}

/// Spectrum description used in configuration files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSpec {
    Flat,
    Explicit(Vec<f64>),
    PowerLaw { amplitude: f64, index: f64 },
}

impl SpectrumSpec {
    /// Spectrum through `l_max`, with `λ_0` zeroed unless `include_monopole`.
    pub fn build(&self, l_max: usize, include_monopole: bool) -> Result<AngularPowerSpectrum> {
        let spec = match self {
            SpectrumSpec::Flat => AngularPowerSpectrum::flat(l_max),
            SpectrumSpec::Explicit(v) => AngularPowerSpectrum::new(v.clone())?,
            SpectrumSpec::PowerLaw { amplitude, index } => AngularPowerSpectrum::power_law(*amplitude, *index, l_max)?,
        };
        if spec.lambdas().len() <= l_max {
            return Err(Error::Validation(format!(
                "spectrum has {} entries but l_max={l_max}",
                spec.lambdas().len()
            )));
        }
        Ok(if include_monopole { spec } else { spec.without_monopole() })
    }
}

fn default_alpha() -> f64 {
    0.05
}

fn default_n_perm() -> usize {
    99
}

fn default_shift() -> f64 {
    1.0
}

/// Rotated-coefficient independence experiment on a single degree block
/// (sphere) or on the circle coefficients `a_1..a_{degree}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndependenceConfig {
    pub space: Space,
    /// Degree `l` on the sphere, `k_max` on the circle.
    pub degree: usize,
    pub law: CoefficientLaw,
    #[serde(default = "default_rotation_search")]
    pub rotation: RotationSpec,
    /// Circle rotation angle `θ'`.
    #[serde(default = "default_shift")]
    pub torus_shift: f64,
    pub n_realizations: usize,
    #[serde(default = "default_orders")]
    pub orders: OrderSelection,
    #[serde(default = "default_n_perm")]
    pub n_perm: usize,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    pub seed: u64,
}

fn default_rotation_search() -> RotationSpec {
    RotationSpec::Search
}

fn default_orders() -> OrderSelection {
    OrderSelection::Pair(1, 2)
}

/// Draws allowed when searching for a witness rotation.
pub const WITNESS_SEARCH_DRAWS: usize = 100;

impl IndependenceConfig {
    fn pairs(&self) -> Result<Vec<(i64, i64)>> {
        let pairs = match self.orders {
            OrderSelection::Pair(m1, m2) => vec![(m1, m2)],
            OrderSelection::Sweep => order_pairs(self.degree).into_iter().filter(|(m1, _)| *m1 >= 1).collect(),
        };
        if pairs.is_empty() {
            return Err(Error::Validation(format!("degree {} has no order pair with 1 <= m1 < m2", self.degree)));
        }
        for &(m1, m2) in &pairs {
            if !(1 <= m1 && m1 < m2 && m2 <= self.degree as i64) {
                return Err(Error::Validation(format!(
                    "orders ({m1}, {m2}) must satisfy 1 <= m1 < m2 <= {}",
                    self.degree
                )));
            }
        }
        Ok(pairs)
    }

    fn validate(&self) -> Result<()> {
        if self.n_realizations < 2 {
            return Err(Error::Validation("n_realizations must be at least 2".into()));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Validation(format!("alpha={} outside (0, 1)", self.alpha)));
        }
        Ok(())
    }
}

/// Rotation chosen for a sphere independence experiment and the warnings it
/// produced.
fn resolve_rotation(cfg: &IndependenceConfig, pairs: &[(i64, i64)]) -> Result<(EulerRotation, f64, Vec<String>)> {
    let l = cfg.degree;
    let mut warnings = Vec::new();
    let min_gap_over = |g: &EulerRotation| -> Result<f64> {
        pairs
            .iter()
            .map(|&(m1, m2)| check_assumption(l, g, m1, m2).map(|r| r.min_gap))
            .try_fold(f64::INFINITY, |acc, v| v.map(|v| acc.min(v)))
    };
    let g = match cfg.rotation {
        RotationSpec::Euler(g) => g,
        RotationSpec::Search if pairs.len() == 1 => {
            search_witness(l, Some(pairs[0]), WITNESS_SEARCH_DRAWS, cfg.seed)?.rotation
        }
        RotationSpec::Search => {
            let mut best = (EulerRotation::identity(), f64::NEG_INFINITY);
            for k in 0..WITNESS_SEARCH_DRAWS as u64 {
                let g = EulerRotation::haar_random(&mut stream(cfg.seed, Domain::RotationSearch, k), false);
                let gap = min_gap_over(&g)?;
                if gap > best.1 {
                    best = (g, gap);
                }
                if gap > crate::repr::assumption::GAP_TOLERANCE {
                    break;
                }
            }
            best.0
        }
    };
    let gap = min_gap_over(&g)?;
    if gap <= crate::repr::assumption::GAP_TOLERANCE {
        warnings.push(format!(
            "rotation is not a witness for the selected orders (min gap {gap:.3e})"
        ));
    }
    Ok((g, gap, warnings))
}

fn complex_pair_rows(values: &[(Complex64, Complex64)]) -> Result<(SampleMatrix, SampleMatrix)> {
    let n = values.len();
    let x = SampleMatrix::new(n, 2, values.iter().flat_map(|(u, _)| [u.re, u.im]).collect())?;
    let y = SampleMatrix::new(n, 2, values.iter().flat_map(|(_, v)| [v.re, v.im]).collect())?;
    Ok((x, y))
}

/// Rotates `n_realizations` independent coefficient sets and tests the
/// rotated coefficients of orders `m₁`, `m₂` (as real 2-vectors) for
/// independence with distance covariance.
pub fn run_independence_experiment(cfg: &IndependenceConfig) -> Result<TestReport> {
    cfg.validate()?;
    let pairs = cfg.pairs()?;
    let n = cfg.n_realizations;
    let max_order = pairs.iter().map(|p| p.1).max().unwrap_or(0) as usize;

    let (rotated, rotation, gap, warnings): (Vec<Vec<Complex64>>, Option<EulerRotation>, Option<f64>, Vec<String>) =
        match cfg.space {
            Space::Sphere => {
                let (g, gap, warnings) = resolve_rotation(cfg, &pairs)?;
                let l = cfg.degree;
                let rep = rep_matrix_phi_basis(l, &g);
                let blocks: Vec<Vec<Complex64>> = (0..n as u64)
                    .into_par_iter()
                    .map(|r| {
                        let mut rng = stream(cfg.seed, Domain::Realization, r);
                        let block = sample_block(l, 1.0, cfg.law, &mut rng);
                        let rotated = rep.entries() * DVector::from_vec(block);
                        // orders 0..=l from offset l
                        rotated.as_slice()[l..].to_vec()
                    })
                    .collect();
                (blocks, Some(g), Some(gap), warnings)
            }
            Space::Torus => {
                let spectrum = AngularPowerSpectrum::flat(cfg.degree);
                let blocks = (0..n as u64)
                    .into_par_iter()
                    .map(|r| {
                        let mut rng = stream(cfg.seed, Domain::Realization, r);
                        let c = sample_torus_coefficients(&spectrum, cfg.law, cfg.degree, &mut rng)?;
                        let c = rotate_torus_coeffs(&c, cfg.torus_shift);
                        Ok((0..=max_order as i64).map(|k| c.get(k)).collect())
                    })
                    .collect::<Result<Vec<Vec<Complex64>>>>()?;
                (blocks, None, None, Vec::new())
            }
        };

    let mut per_pair = Vec::with_capacity(pairs.len());
    for &(m1, m2) in &pairs {
        let values: Vec<(Complex64, Complex64)> =
            rotated.iter().map(|b| (b[m1 as usize], b[m2 as usize])).collect();
        let (x, y) = complex_pair_rows(&values)?;
        per_pair.push(independence_test(&x, &y, cfg.n_perm, cfg.seed)?);
    }
    let (best_idx, best) = per_pair
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.p_value.total_cmp(&b.1.p_value))
        .expect("at least one pair");
    let adjusted = (best.p_value * pairs.len() as f64).min(1.0);

    let mut report = TestReport::new("rotated_coefficient_independence", best.statistic, adjusted, Some(cfg.n_perm))
        .at_level(cfg.alpha)
        .with_seed(cfg.seed)
        .with_meta("space", cfg.space)
        .with_meta("degree", cfg.degree)
        .with_meta("law", cfg.law)
        .with_meta("n_realizations", n)
        .with_meta("orders", pairs[best_idx])
        .with_meta("pair_p_values", per_pair.iter().map(|r| r.p_value).collect::<Vec<_>>())
        .with_meta("pairs", &pairs);
    if let Some(g) = rotation {
        report = report.with_meta("rotation", g);
    }
    if let Some(gap) = gap {
        report = report.with_meta("min_gap", gap);
    }
    if cfg.space == Space::Torus {
        report = report.with_meta("torus_shift", cfg.torus_shift);
    }
    report.warnings = warnings;
    Ok(report)
}

/// Evaluation point for the invariance experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProbePoint {
    Sphere(SpherePoint),
    Circle(f64),
}

fn default_probes() -> Vec<ProbePoint> {
    vec![
        ProbePoint::Sphere(SpherePoint::north_pole()),
        ProbePoint::Sphere(SpherePoint { colatitude: PI / 2.0, longitude: 0.0 }),
    ]
}

fn default_invariance_rotation() -> EulerRotation {
    EulerRotation { alpha: 0.0, beta: PI / 2.0, gamma: 0.0 }
}

fn default_spectrum() -> SpectrumSpec {
    SpectrumSpec::Flat
}

/// Two-batch test of `(T(x_i))_i` against `(T(g⁻¹x_i))_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvarianceConfig {
    pub space: Space,
    /// Bandlimit `l_max` on the sphere, `k_max` on the circle.
    pub l_max: usize,
    #[serde(default = "default_spectrum")]
    pub spectrum: SpectrumSpec,
    #[serde(default)]
    pub include_monopole: bool,
    pub law: CoefficientLaw,
    #[serde(default = "default_invariance_rotation")]
    pub rotation: EulerRotation,
    #[serde(default = "default_shift")]
    pub torus_shift: f64,
    #[serde(default = "default_probes")]
    pub probes: Vec<ProbePoint>,
    pub n_per_batch: usize,
    #[serde(default = "default_n_perm")]
    pub n_perm: usize,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    pub seed: u64,
}

/// Joint values at the probes over two independent batches of realizations,
/// the second evaluated at the rotated probes, compared with the energy test.
pub fn run_invariance_experiment(cfg: &InvarianceConfig) -> Result<TestReport> {
    if cfg.probes.is_empty() {
        return Err(Error::Validation("at least one probe point is required".into()));
    }
    if cfg.n_per_batch < 2 {
        return Err(Error::Validation("n_per_batch must be at least 2".into()));
    }
    let spectrum = cfg.spectrum.build(cfg.l_max, cfg.include_monopole)?;
    let d = cfg.probes.len();
    let n = cfg.n_per_batch;

    let (a, b) = match cfg.space {
        Space::Sphere => {
            let points = cfg
                .probes
                .iter()
                .map(|p| match p {
                    ProbePoint::Sphere(s) => SpherePoint::new(s.colatitude, s.longitude),
                    ProbePoint::Circle(_) => Err(Error::Validation("sphere experiment needs sphere probes".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            let tables_a: Vec<PhiTable> =
                points.iter().map(|p| PhiTable::new(cfg.l_max, p.colatitude, p.longitude)).collect();
            let tables_b: Vec<PhiTable> = points
                .iter()
                .map(|p| {
                    let q = rotate_point(&cfg.rotation, p);
                    PhiTable::new(cfg.l_max, q.colatitude, q.longitude)
                })
                .collect();
            let batch = |domain: Domain, tables: &[PhiTable]| -> Result<Vec<f64>> {
                let rows = (0..n as u64)
                    .into_par_iter()
                    .map(|r| {
                        let mut rng = stream(cfg.seed, domain, r);
                        let c = sample_coefficients(&spectrum, cfg.law, cfg.l_max, &mut rng)?;
                        Ok(tables.iter().map(|t| evaluate_table(&c, t)).collect::<Vec<f64>>())
                    })
                    .collect::<Result<Vec<Vec<f64>>>>()?;
                Ok(rows.concat())
            };
            (batch(Domain::Realization, &tables_a)?, batch(Domain::RealizationB, &tables_b)?)
        }
        Space::Torus => {
            let thetas = cfg
                .probes
                .iter()
                .map(|p| match p {
                    ProbePoint::Circle(t) => Ok(*t),
                    ProbePoint::Sphere(_) => Err(Error::Validation("circle experiment needs angle probes".into())),
                })
                .collect::<Result<Vec<f64>>>()?;
            let batch = |domain: Domain, shift: f64| -> Result<Vec<f64>> {
                let rows = (0..n as u64)
                    .into_par_iter()
                    .map(|r| {
                        let mut rng = stream(cfg.seed, domain, r);
                        let c = sample_torus_coefficients(&spectrum, cfg.law, cfg.l_max, &mut rng)?;
                        thetas.iter().map(|t| evaluate_torus(&c, t - shift)).collect::<Result<Vec<f64>>>()
                    })
                    .collect::<Result<Vec<Vec<f64>>>>()?;
                Ok(rows.concat())
            };
            (batch(Domain::Realization, 0.0)?, batch(Domain::RealizationB, cfg.torus_shift)?)
        }
    };

    let x = SampleMatrix::new(n, d, a)?;
    let y = SampleMatrix::new(n, d, b)?;
    let mut report = energy_two_sample(&x, &y, cfg.n_perm, cfg.seed)?
        .at_level(cfg.alpha)
        .with_meta("space", cfg.space)
        .with_meta("l_max", cfg.l_max)
        .with_meta("law", cfg.law)
        .with_meta("n_per_batch", n)
        .with_meta("probes", &cfg.probes);
    report = match cfg.space {
        Space::Sphere => report.with_meta("rotation", cfg.rotation),
        Space::Torus => report.with_meta("torus_shift", cfg.torus_shift),
    };
    report.test_name = "field_invariance_energy".into();
    Ok(report)
}

fn evaluate_table(c: &HarmonicCoefficients, table: &PhiTable) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..=c.l_max() {
        for (a, phi) in c.block(l).iter().zip(table.block(l)) {
            acc += a * phi;
        }
    }
    acc.re
}

/// Jarque-Bera screening of coefficient marginals and point values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianityConfig {
    pub l_max: usize,
    #[serde(default = "default_spectrum")]
    pub spectrum: SpectrumSpec,
    #[serde(default)]
    pub include_monopole: bool,
    pub law: CoefficientLaw,
    /// `(l, m)` pairs; `Re a_lm` is always tested, `Im a_lm` when `m != 0`.
    pub coefficients: Vec<(usize, i64)>,
    #[serde(default)]
    pub probes: Vec<SpherePoint>,
    pub n_realizations: usize,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    pub seed: u64,
}

/// Applies Jarque-Bera to each selected marginal and reports the
/// Bonferroni-adjusted minimum p-value.
pub fn run_gaussianity_experiment(cfg: &GaussianityConfig) -> Result<TestReport> {
    if cfg.coefficients.is_empty() {
        return Err(Error::domain("coefficient selection is empty"));
    }
    for &(l, m) in &cfg.coefficients {
        if l > cfg.l_max || m.unsigned_abs() as usize > l {
            return Err(Error::domain(format!("coefficient ({l}, {m}) outside l_max={}", cfg.l_max)));
        }
    }
    let spectrum = cfg.spectrum.build(cfg.l_max, cfg.include_monopole)?;
    let tables: Vec<PhiTable> =
        cfg.probes.iter().map(|p| PhiTable::new(cfg.l_max, p.colatitude, p.longitude)).collect();

    let realizations = (0..cfg.n_realizations as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = stream(cfg.seed, Domain::Realization, r);
            sample_coefficients(&spectrum, cfg.law, cfg.l_max, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut labels = Vec::new();
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for &(l, m) in &cfg.coefficients {
        labels.push(format!("re a({l},{m})"));
        columns.push(realizations.iter().map(|c| c.get(l, m).re).collect());
        if m != 0 {
            labels.push(format!("im a({l},{m})"));
            columns.push(realizations.iter().map(|c| c.get(l, m).im).collect());
        }
    }
    for (p, t) in cfg.probes.iter().zip(&tables) {
        labels.push(format!("T({:.4},{:.4})", p.colatitude, p.longitude));
        columns.push(realizations.iter().map(|c| evaluate_table(c, t)).collect());
    }
    let reports = columns.iter().map(|c| jarque_bera(c)).collect::<Result<Vec<_>>>()?;
    let (best_idx, best) = reports
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.p_value.total_cmp(&b.1.p_value))
        .expect("nonempty selection");
    let adjusted = (best.p_value * reports.len() as f64).min(1.0);
    Ok(TestReport::new("gaussianity_jarque_bera", best.statistic, adjusted, None)
        .at_level(cfg.alpha)
        .with_seed(cfg.seed)
        .with_meta("l_max", cfg.l_max)
        .with_meta("law", cfg.law)
        .with_meta("n_realizations", cfg.n_realizations)
        .with_meta("most_extreme", &labels[best_idx])
        .with_meta("marginals", &labels)
        .with_meta("p_values", reports.iter().map(|r| r.p_value).collect::<Vec<_>>()))
}

/// Any of the three experiments, tagged by `kind` in configuration files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExperimentSpec {
    Independence(IndependenceConfig),
    Invariance(InvarianceConfig),
    Gaussianity(GaussianityConfig),
}

impl ExperimentSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentSpec::Independence(_) => "independence",
            ExperimentSpec::Invariance(_) => "invariance",
            ExperimentSpec::Gaussianity(_) => "gaussianity",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            ExperimentSpec::Independence(c) => c.seed,
            ExperimentSpec::Invariance(c) => c.seed,
            ExperimentSpec::Gaussianity(c) => c.seed,
        }
    }

    pub fn alpha(&self) -> f64 {
        match self {
            ExperimentSpec::Independence(c) => c.alpha,
            ExperimentSpec::Invariance(c) => c.alpha,
            ExperimentSpec::Gaussianity(c) => c.alpha,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        let mut out = self.clone();
        match &mut out {
            ExperimentSpec::Independence(c) => c.seed = seed,
            ExperimentSpec::Invariance(c) => c.seed = seed,
            ExperimentSpec::Gaussianity(c) => c.seed = seed,
        }
        out
    }

    /// Sample size per batch (realizations for the one-sample experiments).
    pub fn sample_size(&self) -> usize {
        match self {
            ExperimentSpec::Independence(c) => c.n_realizations,
            ExperimentSpec::Invariance(c) => c.n_per_batch,
            ExperimentSpec::Gaussianity(c) => c.n_realizations,
        }
    }

    pub fn with_sample_size(&self, n: usize) -> Self {
        let mut out = self.clone();
        match &mut out {
            ExperimentSpec::Independence(c) => c.n_realizations = n,
            ExperimentSpec::Invariance(c) => c.n_per_batch = n,
            ExperimentSpec::Gaussianity(c) => c.n_realizations = n,
        }
        out
    }

    pub fn run(&self) -> Result<TestReport> {
        match self {
            ExperimentSpec::Independence(c) => run_independence_experiment(c),
            ExperimentSpec::Invariance(c) => run_invariance_experiment(c),
            ExperimentSpec::Gaussianity(c) => run_gaussianity_experiment(c),
        }
    }
}

/// Rejection count over seeded repetitions of one experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub experiment: String,
    pub n_runs: usize,
    pub base_seed: u64,
    pub alpha: f64,
    pub rejections: usize,
    pub rejection_rate: f64,
    /// 99% binomial band for the rejection count if the null held exactly.
    pub null_band: BinomialBand,
    pub reports: Vec<TestReport>,
}

impl BatchSummary {
    /// `run,seed,test_name,statistic,p_value,reject` rows.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["run", "seed", "test_name", "statistic", "p_value", "reject"])?;
        for (i, r) in self.reports.iter().enumerate() {
            w.serialize((i, r.seed, &r.test_name, r.statistic, r.p_value, r.reject))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Runs `spec` for `n_runs` seeds `seed + r`. Runs execute in parallel on the
/// current rayon pool; the summary does not depend on scheduling.
pub fn run_batch(spec: &ExperimentSpec, n_runs: usize) -> Result<BatchSummary> {
    if n_runs == 0 {
        return Err(Error::Validation("a batch needs at least one run".into()));
    }
    let base = spec.seed();
    let reports = (0..n_runs as u64)
        .into_par_iter()
        .map(|r| spec.with_seed(run_seed(base, r)).run())
        .collect::<Result<Vec<_>>>()?;
    let rejections = reports.iter().filter(|r| r.reject).count();
    Ok(BatchSummary {
        experiment: spec.name().to_string(),
        n_runs,
        base_seed: base,
        alpha: spec.alpha(),
        rejections,
        rejection_rate: rejections as f64 / n_runs as f64,
        null_band: binomial_band(n_runs as u64, spec.alpha(), 0.99)?,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn independence(law: CoefficientLaw, n: usize, seed: u64) -> IndependenceConfig {
        IndependenceConfig {
            space: Space::Sphere,
            degree: 2,
            law,
            rotation: RotationSpec::Search,
            torus_shift: 1.0,
            n_realizations: n,
            orders: OrderSelection::Pair(1, 2),
            n_perm: 99,
            alpha: 0.05,
            seed,
        }
    }

    #[test]
    fn independence_report_is_reproducible() {
        let cfg = independence(CoefficientLaw::FixedModulusPhase, 200, 3);
        let a = run_independence_experiment(&cfg).unwrap();
        let b = run_independence_experiment(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.warnings.is_empty());
        assert!(a.metadata.contains_key("rotation"));
    }

    #[test]
    fn independence_flags_non_witness_rotation() {
        let mut cfg = independence(CoefficientLaw::ComplexGaussian, 100, 1);
        cfg.rotation = RotationSpec::Euler(EulerRotation::identity());
        let r = run_independence_experiment(&cfg).unwrap();
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn invalid_orders_are_validation_errors() {
        let mut cfg = independence(CoefficientLaw::ComplexGaussian, 100, 1);
        cfg.orders = OrderSelection::Pair(0, 1);
        assert!(matches!(run_independence_experiment(&cfg), Err(Error::Validation(_))));
        cfg.degree = 1;
        cfg.orders = OrderSelection::Sweep;
        assert!(matches!(run_independence_experiment(&cfg), Err(Error::Validation(_))));
    }

    #[test]
    fn sweep_tests_every_pair() {
        let mut cfg = independence(CoefficientLaw::ComplexGaussian, 150, 2);
        cfg.degree = 3;
        cfg.orders = OrderSelection::Sweep;
        let r = run_independence_experiment(&cfg).unwrap();
        assert_eq!(r.metadata["pair_p_values"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn gaussianity_detects_rademacher_axis_coefficient() {
        let cfg = GaussianityConfig {
            l_max: 2,
            spectrum: SpectrumSpec::Flat,
            include_monopole: false,
            law: CoefficientLaw::RademacherReal,
            coefficients: vec![(2, 0)],
            probes: vec![],
            n_realizations: 2000,
            alpha: 0.01,
            seed: 4,
        };
        let r = run_gaussianity_experiment(&cfg).unwrap();
        assert!(r.reject && r.p_value < 1e-10);
        let empty = GaussianityConfig { coefficients: vec![], ..cfg };
        assert!(matches!(run_gaussianity_experiment(&empty), Err(Error::Domain(_))));
    }

    #[test]
    fn invariance_probe_space_must_match() {
        let cfg = InvarianceConfig {
            space: Space::Torus,
            l_max: 3,
            spectrum: SpectrumSpec::Flat,
            include_monopole: false,
            law: CoefficientLaw::FixedModulusPhase,
            rotation: default_invariance_rotation(),
            torus_shift: 1.0,
            probes: default_probes(),
            n_per_batch: 50,
            n_perm: 99,
            alpha: 0.05,
            seed: 0,
        };
        assert!(matches!(run_invariance_experiment(&cfg), Err(Error::Validation(_))));
        let ok = InvarianceConfig { probes: vec![ProbePoint::Circle(0.0), ProbePoint::Circle(1.0)], ..cfg };
        let r = run_invariance_experiment(&ok).unwrap();
        assert!(r.p_value > 0.0 && r.p_value <= 1.0);
    }

    #[test]
    fn configs_roundtrip_through_json() {
        let spec = ExperimentSpec::Independence(independence(CoefficientLaw::UniformDisk, 10, 1));
        let text = serde_json::to_string(&spec).unwrap();
        assert!(text.contains("\"kind\":\"independence\""));
        assert_eq!(serde_json::from_str::<ExperimentSpec>(&text).unwrap(), spec);
        let bad = text.replace("\"seed\"", "\"sede\"");
        assert!(serde_json::from_str::<ExperimentSpec>(&bad).is_err());
    }

    #[test]
    fn batch_summary_counts_rejections() {
        let spec = ExperimentSpec::Independence(independence(CoefficientLaw::ComplexGaussian, 60, 10));
        let b = run_batch(&spec, 4).unwrap();
        assert_eq!(b.reports.len(), 4);
        assert_eq!(b.rejections, b.reports.iter().filter(|r| r.reject).count());
        assert_eq!(b.reports[2].seed, Some(12));
        let mut buf = Vec::new();
        b.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 5);
    }
}
