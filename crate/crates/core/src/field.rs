//! Random spectral coefficients and the fields they define.
//!
//! A real isotropic field truncated at degree `l_max` is
//! `T(x) = Σ_l Σ_m sqrt(λ_l) α_lm φ_lm(x)` with standardized independent draws
//! `α_lm` for `m >= 0` and `α_{l,-m} = conj(α_lm)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::FieldValues;

/// Coefficients `a_lm`, `0 <= l <= l_max`, `-l <= m <= l`, stored per degree
/// with order `m` at offset `m + l`.
///
/// Real fields satisfy `a_{l,-m} = conj(a_lm)` (so `a_l0` is real); the
/// samplers and the JSON loader produce only such coefficient sets, other
/// constructors accept general complex data.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoefficients {
    l_max: usize,
    blocks: Vec<Vec<Complex64>>,
}

impl HarmonicCoefficients {
    pub fn zeros(l_max: usize) -> Self {
        let blocks = (0..=l_max).map(|l| vec![Complex64::new(0.0, 0.0); 2 * l + 1]).collect();
        Self { l_max, blocks }
    }

    /// Builds a real-field coefficient set from the `m >= 0` halves of each
    /// block. `a_l0` must be real.
    pub fn from_nonnegative(halves: Vec<Vec<Complex64>>) -> Result<Self> {
        if halves.is_empty() {
            return Err(Error::domain("at least one degree block is required"));
        }
        let l_max = halves.len() - 1;
        let mut out = Self::zeros(l_max);
        for (l, half) in halves.into_iter().enumerate() {
            if half.len() != l + 1 {
                return Err(Error::domain(format!(
                    "block l={l} must hold {} entries for m >= 0, got {}",
                    l + 1,
                    half.len()
                )));
            }
            if half[0].im.abs() > 1e-12 {
                return Err(Error::domain(format!("a_{{{l},0}} = {} is not real", half[0])));
            }
            out.set_pair(l, 0, Complex64::new(half[0].re, 0.0));
            for (m, v) in half.into_iter().enumerate().skip(1) {
                out.set_pair(l, m as i64, v);
            }
        }
        Ok(out)
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn block(&self, l: usize) -> &[Complex64] {
        &self.blocks[l]
    }

    pub fn block_mut(&mut self, l: usize) -> &mut [Complex64] {
        &mut self.blocks[l]
    }

    pub fn get(&self, l: usize, m: i64) -> Complex64 {
        self.blocks[l][(m + l as i64) as usize]
    }

    pub fn set(&mut self, l: usize, m: i64, value: Complex64) {
        self.blocks[l][(m + l as i64) as usize] = value;
    }

    /// Sets `a_lm = value` and `a_{l,-m} = conj(value)`; for `m = 0` the
    /// imaginary part is dropped.
    pub fn set_pair(&mut self, l: usize, m: i64, value: Complex64) {
        let m = m.abs();
        if m == 0 {
            self.set(l, 0, Complex64::new(value.re, 0.0));
        } else {
            self.set(l, m, value);
            self.set(l, -m, value.conj());
        }
    }

    /// Largest violation `|a_{l,-m} - conj(a_lm)|` of the reality constraint.
    pub fn reality_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (l, block) in self.blocks.iter().enumerate() {
            for m in 0..=l {
                let pos = block[l + m];
                let neg = block[l - m];
                worst = worst.max((neg - pos.conj()).norm());
            }
        }
        worst
    }

    /// Projects onto real-field coefficients: `a_lm ← (a_lm + conj a_{l,-m})/2`.
    pub fn symmetrize(&mut self) {
        for (l, block) in self.blocks.iter_mut().enumerate() {
            for m in 0..=l {
                let avg = 0.5 * (block[l + m] + block[l - m].conj());
                if m == 0 {
                    block[l] = Complex64::new(avg.re, 0.0);
                } else {
                    block[l + m] = avg;
                    block[l - m] = avg.conj();
                }
            }
        }
    }

    /// `Σ_m |a_lm|²` for each degree.
    pub fn block_power(&self) -> Vec<f64> {
        self.blocks.iter().map(|b| b.iter().map(|z| z.norm_sqr()).sum()).collect()
    }

    /// Largest entrywise distance to `other` (which must share `l_max`).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.l_max, other.l_max);
        self.blocks
            .iter()
            .flatten()
            .zip(other.blocks.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn to_file(&self) -> CoefficientsFile {
        CoefficientsFile {
            l_max: self.l_max,
            blocks: self
                .blocks
                .iter()
                .enumerate()
                .map(|(l, b)| b[l..].iter().map(|z| [z.re, z.im]).collect())
                .collect(),
            seed: None,
            config_hash: None,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_file())?)
    }

    /// Parses the JSON layout of [`CoefficientsFile`]. Files with a non-real
    /// `a_l0` or inconsistent block sizes are rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CoefficientsFile = serde_json::from_str(text)?;
        file.into_coefficients()
    }
}

/// On-disk layout: only orders `m >= 0` are stored, the rest follow from the
/// reality constraint.
///
/// ```json
/// {"l_max": 1, "blocks": [[[0.0, 0.0]], [[0.3, 0.0], [0.1, -0.2]]]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientsFile {
    pub l_max: usize,
    pub blocks: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config_hash: Option<String>,
}

impl CoefficientsFile {
    pub fn into_coefficients(self) -> Result<HarmonicCoefficients> {
        if self.blocks.len() != self.l_max + 1 {
            return Err(Error::Validation(format!(
                "expected {} blocks for l_max={}, got {}",
                self.l_max + 1,
                self.l_max,
                self.blocks.len()
            )));
        }
        for (l, b) in self.blocks.iter().enumerate() {
            if b.first().is_some_and(|z| z[1] != 0.0) {
                return Err(Error::Validation(format!("a_{{{l},0}} has imaginary part {}", b[0][1])));
            }
        }
        let halves = self
            .blocks
            .into_iter()
            .map(|b| b.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
            .collect();
        HarmonicCoefficients::from_nonnegative(halves).map_err(|e| Error::Validation(e.to_string()))
    }
}

/// Eigenvalues `λ_l >= 0` of the covariance operator, one per degree (or per
/// frequency `k` on the circle).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngularPowerSpectrum {
    lambdas: Vec<f64>,
}

impl AngularPowerSpectrum {
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if let Some((l, v)) = lambdas.iter().enumerate().find(|(_, v)| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::domain(format!("λ_{l} = {v} must be finite and nonnegative")));
        }
        Ok(Self { lambdas })
    }

    /// `λ_l = amplitude (1 + l)^(-index)` for `l <= l_max`.
    pub fn power_law(amplitude: f64, index: f64, l_max: usize) -> Result<Self> {
        Self::new((0..=l_max).map(|l| amplitude * (1.0 + l as f64).powf(-index)).collect())
    }

    /// Flat spectrum `λ_l = 1`.
    pub fn flat(l_max: usize) -> Self {
        Self { lambdas: vec![1.0; l_max + 1] }
    }

    /// Same spectrum with the trivial-representation eigenvalue removed.
    pub fn without_monopole(mut self) -> Self {
        if let Some(first) = self.lambdas.first_mut() {
            *first = 0.0;
        }
        self
    }

    pub fn l_max(&self) -> usize {
        self.lambdas.len().saturating_sub(1)
    }

    pub fn lambda(&self, l: usize) -> f64 {
        self.lambdas[l]
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// `Σ_l λ_l (2l + 1)`, the expected energy of a sphere field.
    pub fn total_variance(&self) -> f64 {
        self.lambdas.iter().enumerate().map(|(l, v)| v * (2 * l + 1) as f64).sum()
    }

    /// `λ_0 + 2 Σ_{k>=1} λ_k`, the expected energy of a circle field.
    pub fn torus_total_variance(&self) -> f64 {
        self.lambdas.iter().enumerate().map(|(k, v)| if k == 0 { *v } else { 2.0 * v }).sum()
    }

    fn check_covers(&self, l_max: usize) -> Result<()> {
        if self.lambdas.len() <= l_max {
            return Err(Error::domain(format!(
                "spectrum defined through l={} but l_max={l_max} requested",
                self.l_max()
            )));
        }
        Ok(())
    }
}

/// Law of the standardized coefficients. Every law is centered with
/// `E|α|² = 1`; the complex draws are invariant in law under multiplication
/// by a unit complex number.
///
/// Real-valued coefficients (`α_l0`, and `α_0` on the circle) use the law's
/// real marginal, the law of `sqrt(2) Re α`, except for `RademacherReal`
/// whose real draws are `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientLaw {
    /// `(N₁ + i N₂)/sqrt(2)`; real marginal `N(0, 1)`.
    ComplexGaussian,
    /// `e^{iU}`, `U` uniform; real marginal `sqrt(2) cos U`.
    FixedModulusPhase,
    /// Real draws `±1`; complex draws `±e^{iU}`, which has the law of `e^{iU}`.
    RademacherReal,
    /// Uniform on the disk of radius `sqrt(2)`; real marginal `2 sqrt(V) cos U`.
    UniformDisk,
}

impl CoefficientLaw {
    pub const ALL: [CoefficientLaw; 4] = [
        CoefficientLaw::ComplexGaussian,
        CoefficientLaw::FixedModulusPhase,
        CoefficientLaw::RademacherReal,
        CoefficientLaw::UniformDisk,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CoefficientLaw::ComplexGaussian => "complex_gaussian",
            CoefficientLaw::FixedModulusPhase => "fixed_modulus_phase",
            CoefficientLaw::RademacherReal => "rademacher_real",
            CoefficientLaw::UniformDisk => "uniform_disk",
        }
    }

    pub fn is_gaussian(&self) -> bool {
        matches!(self, CoefficientLaw::ComplexGaussian)
    }

    pub fn sample_complex<R: Rng + ?Sized>(&self, rng: &mut R) -> Complex64 {
        match self {
            CoefficientLaw::ComplexGaussian => {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
            }
            CoefficientLaw::FixedModulusPhase | CoefficientLaw::RademacherReal => {
                Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI))
            }
            CoefficientLaw::UniformDisk => {
                let r = (2.0 * rng.random::<f64>()).sqrt();
                Complex64::from_polar(r, rng.random_range(0.0..2.0 * PI))
            }
        }
    }

    pub fn sample_real<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            CoefficientLaw::ComplexGaussian => rng.sample(StandardNormal),
            CoefficientLaw::FixedModulusPhase => 2f64.sqrt() * rng.random_range(0.0..2.0 * PI).cos(),
            CoefficientLaw::RademacherReal => {
                if rng.random::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
            CoefficientLaw::UniformDisk => {
                let r = (2.0 * rng.random::<f64>()).sqrt();
                2f64.sqrt() * r * rng.random_range(0.0..2.0 * PI).cos()
            }
        }
    }
}

impl fmt::Display for CoefficientLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoefficientLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|law| law.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown coefficient law '{s}'")))
    }
}

/// One degree block: `a_l0` real, `a_lm` for `m = 1..=l` complex, all scaled
/// by `sqrt(λ)`, negative orders filled by conjugation. Draw order is `m`
/// ascending from 0.
pub fn sample_block<R: Rng + ?Sized>(l: usize, lambda: f64, law: CoefficientLaw, rng: &mut R) -> Vec<Complex64> {
    let scale = lambda.sqrt();
    let mut block = vec![Complex64::new(0.0, 0.0); 2 * l + 1];
    block[l] = Complex64::new(scale * law.sample_real(rng), 0.0);
    for m in 1..=l {
        let z = scale * law.sample_complex(rng);
        block[l + m] = z;
        block[l - m] = z.conj();
    }
    block
}

/// Draws a real-field coefficient set, degree ascending then order ascending
/// from 0. Distinct `(l, m >= 0)` coefficients are independent.
pub fn sample_coefficients<R: Rng + ?Sized>(
    spectrum: &AngularPowerSpectrum,
    law: CoefficientLaw,
    l_max: usize,
    rng: &mut R,
) -> Result<HarmonicCoefficients> {
    spectrum.check_covers(l_max)?;
    let blocks = (0..=l_max).map(|l| sample_block(l, spectrum.lambda(l), law, rng)).collect();
    Ok(HarmonicCoefficients { l_max, blocks })
}

/// Fourier coefficients `a_k`, `|k| <= k_max`, of a real field on the circle,
/// with `a_{-k} = conj(a_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusCoefficients {
    k_max: usize,
    coeffs: Vec<Complex64>,
}

impl TorusCoefficients {
    pub fn zeros(k_max: usize) -> Self {
        Self { k_max, coeffs: vec![Complex64::new(0.0, 0.0); 2 * k_max + 1] }
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn get(&self, k: i64) -> Complex64 {
        self.coeffs[(k + self.k_max as i64) as usize]
    }

    /// Sets `a_k` and `a_{-k} = conj(a_k)` (`a_0` keeps its real part only).
    pub fn set_pair(&mut self, k: i64, value: Complex64) {
        let k = k.abs();
        let km = self.k_max as i64;
        if k == 0 {
            self.coeffs[km as usize] = Complex64::new(value.re, 0.0);
        } else {
            self.coeffs[(km + k) as usize] = value;
            self.coeffs[(km - k) as usize] = value.conj();
        }
    }
}

/// Circle analogue of [`sample_coefficients`]: `a_0` from the real marginal,
/// `a_k` for `k = 1..=k_max` from the complex law, scaled by `sqrt(λ_k)`.
pub fn sample_torus_coefficients<R: Rng + ?Sized>(
    spectrum: &AngularPowerSpectrum,
    law: CoefficientLaw,
    k_max: usize,
    rng: &mut R,
) -> Result<TorusCoefficients> {
    spectrum.check_covers(k_max)?;
    let mut out = TorusCoefficients::zeros(k_max);
    out.set_pair(0, Complex64::new(spectrum.lambda(0).sqrt() * law.sample_real(rng), 0.0));
    for k in 1..=k_max {
        out.set_pair(k as i64, spectrum.lambda(k).sqrt() * law.sample_complex(rng));
    }
    Ok(out)
}

/// `T(θ) = Σ_k a_k e^{ikθ}`.
///
/// Fails with [`Error::Numeric`] if the imaginary residual exceeds `1e-12`
/// (relative to the coefficient scale), which signals a broken reality
/// constraint.
pub fn evaluate_torus(coeffs: &TorusCoefficients, theta: f64) -> Result<f64> {
    let km = coeffs.k_max as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale: f64 = 0.0;
    for k in -km..=km {
        let a = coeffs.get(k);
        scale += a.norm();
        sum += a * Complex64::from_polar(1.0, k as f64 * theta);
    }
    if sum.im.abs() > 1e-12 * scale.max(1.0) {
        return Err(Error::numeric(format!(
            "circle field has imaginary residual {} at θ={theta}",
            sum.im
        )));
    }
    Ok(sum.re)
}

/// `Σ_j w_j T(x_j)²`, the discretized `∫ T² dm`.
pub fn field_energy(values: &FieldValues) -> Result<f64> {
    let real = values
        .real_values()
        .ok_or_else(|| Error::domain("field energy is defined for real fields"))?;
    Ok(values
        .grid()
        .weights()
        .iter()
        .zip(real)
        .map(|(w, t)| w * t * t)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, Domain};

    #[test]
    fn zero_spectrum_gives_zero_coefficients() {
        let spec = AngularPowerSpectrum::new(vec![0.0; 5]).unwrap();
        let mut rng = stream(1, Domain::Validation, 0);
        let a = sample_coefficients(&spec, CoefficientLaw::ComplexGaussian, 4, &mut rng).unwrap();
        assert!(a.max_abs_diff(&HarmonicCoefficients::zeros(4)) == 0.0);
    }

    #[test]
    fn negative_eigenvalue_is_rejected() {
        assert!(matches!(AngularPowerSpectrum::new(vec![1.0, -0.1]), Err(Error::Domain(_))));
    }

    #[test]
    fn spectrum_must_cover_requested_degree() {
        let spec = AngularPowerSpectrum::flat(2);
        let mut rng = stream(1, Domain::Validation, 0);
        assert!(sample_coefficients(&spec, CoefficientLaw::ComplexGaussian, 3, &mut rng).is_err());
    }

    #[test]
    fn samples_satisfy_reality_exactly() {
        let spec = AngularPowerSpectrum::power_law(1.0, 1.5, 10).unwrap();
        for law in CoefficientLaw::ALL {
            let mut rng = stream(3, Domain::Validation, 0);
            let a = sample_coefficients(&spec, law, 10, &mut rng).unwrap();
            assert_eq!(a.reality_violation(), 0.0);
            for l in 0..=10 {
                assert_eq!(a.get(l, 0).im, 0.0);
            }
        }
    }

    #[test]
    fn fixed_modulus_phase_has_unit_modulus() {
        let spec = AngularPowerSpectrum::power_law(2.0, 1.0, 6).unwrap();
        let mut rng = stream(4, Domain::Validation, 0);
        let a = sample_coefficients(&spec, CoefficientLaw::FixedModulusPhase, 6, &mut rng).unwrap();
        for l in 1..=6 {
            for m in 1..=l as i64 {
                let ratio = a.get(l, m).norm() / spec.lambda(l).sqrt();
                assert!((ratio - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn second_moments_match_eigenvalues() {
        let spec = AngularPowerSpectrum::power_law(1.0, 1.0, 3).unwrap();
        let n = 10_000;
        let mut acc = vec![vec![0.0; 4]; 4];
        for r in 0..n {
            let mut rng = stream(5, Domain::Realization, r);
            let a = sample_coefficients(&spec, CoefficientLaw::ComplexGaussian, 3, &mut rng).unwrap();
            for (l, row) in acc.iter_mut().enumerate() {
                for (m, v) in row.iter_mut().enumerate().take(l + 1) {
                    *v += a.get(l, m as i64).norm_sqr() / n as f64;
                }
            }
        }
        for (l, row) in acc.iter().enumerate() {
            for (m, v) in row.iter().enumerate().take(l + 1) {
                let rel = v / spec.lambda(l) - 1.0;
                assert!(rel.abs() < 0.05, "l={l} m={m}: {rel}");
            }
        }
    }

    #[test]
    fn all_laws_are_standardized() {
        let n = 40_000;
        for law in CoefficientLaw::ALL {
            let mut rng = stream(6, Domain::Validation, 0);
            let (mut c2, mut r2, mut cmean, mut rmean) = (0.0, 0.0, Complex64::new(0.0, 0.0), 0.0);
            for _ in 0..n {
                let z = law.sample_complex(&mut rng);
                let x = law.sample_real(&mut rng);
                c2 += z.norm_sqr() / n as f64;
                r2 += x * x / n as f64;
                cmean += z / n as f64;
                rmean += x / n as f64;
            }
            assert!((c2 - 1.0).abs() < 0.03, "{law}: E|a|² = {c2}");
            assert!((r2 - 1.0).abs() < 0.03, "{law}: E a² = {r2}");
            assert!(cmean.norm() < 0.03 && rmean.abs() < 0.03, "{law} not centered");
        }
    }

    #[test]
    fn law_names_roundtrip() {
        for law in CoefficientLaw::ALL {
            assert_eq!(law.name().parse::<CoefficientLaw>().unwrap(), law);
        }
        assert!(matches!("cauchy".parse::<CoefficientLaw>(), Err(Error::Validation(_))));
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let spec = AngularPowerSpectrum::flat(3);
        let mut rng = stream(8, Domain::Validation, 0);
        let a = sample_coefficients(&spec, CoefficientLaw::UniformDisk, 3, &mut rng).unwrap();
        let back = HarmonicCoefficients::from_json(&a.to_json().unwrap()).unwrap();
        assert_eq!(a, back);

        let bad = r#"{"l_max": 1, "blocks": [[[0.0, 0.0]], [[0.3, 0.1], [0.1, -0.2]]]}"#;
        assert!(matches!(HarmonicCoefficients::from_json(bad), Err(Error::Validation(_))));
        let short = r#"{"l_max": 2, "blocks": [[[0.0, 0.0]]]}"#;
        assert!(matches!(HarmonicCoefficients::from_json(short), Err(Error::Validation(_))));
        let ok = r#"{"l_max": 1, "blocks": [[[0.0, 0.0]], [[0.3, 0.0], [0.1, -0.2]]]}"#;
        let c = HarmonicCoefficients::from_json(ok).unwrap();
        assert_eq!(c.get(1, -1), Complex64::new(0.1, 0.2));
    }

    #[test]
    fn torus_evaluation() {
        let mut c = TorusCoefficients::zeros(2);
        c.set_pair(0, Complex64::new(1.0, 0.0));
        assert!((evaluate_torus(&c, 0.7).unwrap() - 1.0).abs() < 1e-15);

        let mut c = TorusCoefficients::zeros(1);
        c.set_pair(1, Complex64::new(1.0, 0.0));
        for &t in &[0.0, 0.4, 2.0, 5.5] {
            assert!((evaluate_torus(&c, t).unwrap() - 2.0 * f64::cos(t)).abs() < 1e-14);
        }
    }

    #[test]
    fn torus_evaluation_matches_dft_oracle() {
        let spec = AngularPowerSpectrum::flat(6);
        let mut rng = stream(9, Domain::Validation, 0);
        let c = sample_torus_coefficients(&spec, CoefficientLaw::ComplexGaussian, 6, &mut rng).unwrap();
        // independent real-form evaluation: a_0 + 2 Σ (Re a_k cos kθ - Im a_k sin kθ)
        for &t in &[0.0, 0.3, 1.9, 4.4] {
            let mut oracle = c.get(0).re;
            for k in 1..=6i64 {
                let a = c.get(k);
                oracle += 2.0 * (a.re * (k as f64 * t).cos() - a.im * (k as f64 * t).sin());
            }
            assert!((evaluate_torus(&c, t).unwrap() - oracle).abs() < 1e-12);
        }
    }

    #[test]
    fn torus_residual_trap() {
        let mut c = TorusCoefficients::zeros(1);
        c.coeffs[2] = Complex64::new(0.0, 1.0);
        assert!(matches!(evaluate_torus(&c, 0.0), Err(Error::Numeric(_))));
    }

    #[test]
    fn single_real_torus_coefficient() {
        let spec = AngularPowerSpectrum::flat(0);
        let mut rng = stream(10, Domain::Validation, 0);
        let c = sample_torus_coefficients(&spec, CoefficientLaw::RademacherReal, 0, &mut rng).unwrap();
        assert_eq!(c.k_max(), 0);
        assert_eq!(c.get(0).im, 0.0);
        assert_eq!(c.get(0).re.abs(), 1.0);
    }
}
