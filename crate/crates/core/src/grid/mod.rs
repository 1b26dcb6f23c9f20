//! Quadrature grids and exact bandlimited transforms.
//!
//! The sphere grid is a Gauss-Legendre rule in `cos θ` times an equiangular
//! rule in longitude, with weights normalized to a probability measure. With
//! `n_theta >= l_max + 1` and `n_phi >= 2 l_max + 1` the rule integrates every
//! product `φ_lm conj(φ_l'm')` with `l, l' <= l_max` exactly.

mod su2;

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{AngularPowerSpectrum, HarmonicCoefficients};
use crate::repr::legendre::NormalizedLegendre;
use crate::repr::PhiTable;

pub use su2::{Su2Grid, Su2Node};

/// Gauss-Legendre nodes on `[-1, 1]` in ascending order and their weights
/// (summing to 2).
pub fn gauss_legendre_nodes(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::domain("Gauss-Legendre rule needs at least one node"));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_and_derivative(n, x);
        if d.is_finite() {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok((nodes, weights))
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

/// Product grid on the sphere. Node `i * n_phi + j` sits at colatitude
/// `θ_i` (ascending) and longitude `2π j / n_phi`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    n_theta: usize,
    n_phi: usize,
    colatitudes: Vec<f64>,
    longitudes: Vec<f64>,
    ring_weights: Vec<f64>,
    weights: Vec<f64>,
}

/// The `(l_max + 1) × (2 l_max + 1)` grid exact at bandlimit `l_max`.
pub fn build_grid(l_max: usize) -> SphereGrid {
    SphereGrid::with_sizes(l_max + 1, 2 * l_max + 1).expect("sizes are positive")
}

impl SphereGrid {
    pub fn with_sizes(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_phi == 0 {
            return Err(Error::domain("longitude count must be positive"));
        }
        let (x, w) = gauss_legendre_nodes(n_theta)?;
        // x ascending means colatitude descending; flip to ascending colatitude
        let colatitudes: Vec<f64> = x.iter().rev().map(|v| v.clamp(-1.0, 1.0).acos()).collect();
        let ring_weights: Vec<f64> = w.iter().rev().map(|v| 0.5 * v).collect();
        let longitudes: Vec<f64> = (0..n_phi).map(|j| 2.0 * PI * j as f64 / n_phi as f64).collect();
        let weights = ring_weights
            .iter()
            .flat_map(|rw| std::iter::repeat_n(rw / n_phi as f64, n_phi))
            .collect();
        Ok(Self { n_theta, n_phi, colatitudes, longitudes, ring_weights, weights })
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn len(&self) -> usize {
        self.n_theta * self.n_phi
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest degree the grid integrates exactly in the transforms.
    pub fn bandlimit(&self) -> usize {
        (self.n_theta - 1).min((self.n_phi - 1) / 2)
    }

    pub fn colatitudes(&self) -> &[f64] {
        &self.colatitudes
    }

    pub fn longitudes(&self) -> &[f64] {
        &self.longitudes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `(colatitude, longitude)` of node `idx`.
    pub fn node(&self, idx: usize) -> (f64, f64) {
        (self.colatitudes[idx / self.n_phi], self.longitudes[idx % self.n_phi])
    }

    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..self.len()).map(|i| self.node(i))
    }

    fn check_bandlimit(&self, l_max: usize) -> Result<()> {
        if l_max > self.bandlimit() {
            return Err(Error::domain(format!(
                "grid supports bandlimit {} but l_max={l_max} was requested",
                self.bandlimit()
            )));
        }
        Ok(())
    }
}

/// Samples of a field at the nodes of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldValues<'g> {
    grid: &'g SphereGrid,
    values: Samples,
}

#[derive(Debug, Clone, PartialEq)]
enum Samples {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

impl<'g> FieldValues<'g> {
    pub fn real(grid: &'g SphereGrid, values: Vec<f64>) -> Result<Self> {
        Self::check_len(grid, values.len())?;
        Ok(Self { grid, values: Samples::Real(values) })
    }

    pub fn complex(grid: &'g SphereGrid, values: Vec<Complex64>) -> Result<Self> {
        Self::check_len(grid, values.len())?;
        Ok(Self { grid, values: Samples::Complex(values) })
    }

    /// Evaluates `f` at every node.
    pub fn from_fn(grid: &'g SphereGrid, f: impl Fn(f64, f64) -> f64) -> Self {
        Self { grid, values: Samples::Real(grid.nodes().map(|(t, p)| f(t, p)).collect()) }
    }

    fn check_len(grid: &SphereGrid, n: usize) -> Result<()> {
        if n != grid.len() {
            return Err(Error::domain(format!("{n} values for a grid with {} nodes", grid.len())));
        }
        Ok(())
    }

    pub fn grid(&self) -> &'g SphereGrid {
        self.grid
    }

    pub fn is_real(&self) -> bool {
        matches!(self.values, Samples::Real(_))
    }

    pub fn real_values(&self) -> Option<&[f64]> {
        match &self.values {
            Samples::Real(v) => Some(v),
            Samples::Complex(_) => None,
        }
    }

    /// Values as complex numbers (real fields get zero imaginary parts).
    pub fn complex_values(&self) -> Vec<Complex64> {
        match &self.values {
            Samples::Real(v) => v.iter().map(|x| Complex64::new(*x, 0.0)).collect(),
            Samples::Complex(v) => v.clone(),
        }
    }

    /// Writes `colatitude,longitude,weight,value[,value_im]` rows, preceded by
    /// `# `-prefixed comment lines when `comments` is nonempty.
    pub fn write_csv<W: Write>(&self, mut out: W, comments: &[String]) -> Result<()> {
        for c in comments {
            writeln!(out, "# {c}")?;
        }
        let mut w = csv::Writer::from_writer(out);
        match &self.values {
            Samples::Real(v) => {
                w.write_record(["colatitude", "longitude", "weight", "value"])?;
                for (i, x) in v.iter().enumerate() {
                    let (t, p) = self.grid.node(i);
                    w.serialize((t, p, self.grid.weights[i], x))?;
                }
            }
            Samples::Complex(v) => {
                w.write_record(["colatitude", "longitude", "weight", "value", "value_im"])?;
                for (i, z) in v.iter().enumerate() {
                    let (t, p) = self.grid.node(i);
                    w.serialize((t, p, self.grid.weights[i], z.re, z.im))?;
                }
            }
        }
        w.flush()?;
        Ok(())
    }
}

const SYNTH_IMAG_TOLERANCE: f64 = 1e-10;

fn finish_synthesis<'g>(grid: &'g SphereGrid, coeffs: &HarmonicCoefficients, out: Vec<Complex64>) -> Result<FieldValues<'g>> {
    if coeffs.reality_violation() > 1e-12 {
        return FieldValues::complex(grid, out);
    }
    let worst = out.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if worst > SYNTH_IMAG_TOLERANCE {
        return Err(Error::numeric(format!(
            "synthesized real field has imaginary residual {worst:e}"
        )));
    }
    FieldValues::real(grid, out.into_iter().map(|z| z.re).collect())
}

/// `T(x_j) = Σ_lm a_lm φ_lm(x_j)` by direct summation at each node.
///
/// The result is flagged real when the coefficients satisfy the reality
/// constraint; the discarded imaginary residual is checked against `1e-10`.
pub fn synthesize<'g>(coeffs: &HarmonicCoefficients, grid: &'g SphereGrid) -> Result<FieldValues<'g>> {
    let l_max = coeffs.l_max();
    grid.check_bandlimit(l_max)?;
    let out = grid
        .nodes()
        .map(|(t, p)| evaluate_with_table(coeffs, &PhiTable::new(l_max, t, p)))
        .collect();
    finish_synthesis(grid, coeffs, out)
}

/// Same values as [`synthesize`], summing over degree per ring and then over
/// longitude.
pub fn synthesize_separable<'g>(coeffs: &HarmonicCoefficients, grid: &'g SphereGrid) -> Result<FieldValues<'g>> {
    let l_max = coeffs.l_max();
    grid.check_bandlimit(l_max)?;
    let lm = l_max as i64;
    let mut out = Vec::with_capacity(grid.len());
    let mut ring = vec![Complex64::new(0.0, 0.0); 2 * l_max + 1];
    for &theta in &grid.colatitudes {
        let leg = NormalizedLegendre::new(l_max, theta.cos());
        for m in -lm..=lm {
            let am = m.unsigned_abs() as usize;
            ring[(m + lm) as usize] = (am..=l_max).map(|l| coeffs.get(l, m) * leg.get(l, am)).sum();
        }
        for &phi in &grid.longitudes {
            let mut acc = Complex64::new(0.0, 0.0);
            for m in -lm..=lm {
                acc += ring[(m + lm) as usize] * Complex64::from_polar(1.0, m as f64 * phi);
            }
            out.push(acc);
        }
    }
    finish_synthesis(grid, coeffs, out)
}

/// `a_lm = Σ_j w_j T(x_j) conj(φ_lm(x_j))`, the inner product `⟨T, φ_lm⟩`.
///
/// For the conjugation-compatible basis this equals `∫ T φ_{l,-m} dm`, the
/// unconjugated pairing evaluated at the partner order.
pub fn analyze(values: &FieldValues<'_>, l_max: usize) -> Result<HarmonicCoefficients> {
    let grid = values.grid;
    grid.check_bandlimit(l_max)?;
    let samples = values.complex_values();
    let mut out = HarmonicCoefficients::zeros(l_max);
    for (j, (t, p)) in grid.nodes().enumerate() {
        let table = PhiTable::new(l_max, t, p);
        let wt = grid.weights[j] * samples[j];
        for l in 0..=l_max {
            for (a, phi) in out.block_mut(l).iter_mut().zip(table.block(l)) {
                *a += wt * phi.conj();
            }
        }
    }
    if values.is_real() {
        out.symmetrize();
    }
    Ok(out)
}

/// Same coefficients as [`analyze`], via a longitude Fourier sum per ring.
pub fn analyze_separable(values: &FieldValues<'_>, l_max: usize) -> Result<HarmonicCoefficients> {
    let grid = values.grid;
    grid.check_bandlimit(l_max)?;
    let samples = values.complex_values();
    let lm = l_max as i64;
    let mut out = HarmonicCoefficients::zeros(l_max);
    for (i, &theta) in grid.colatitudes.iter().enumerate() {
        let leg = NormalizedLegendre::new(l_max, theta.cos());
        let row = &samples[i * grid.n_phi..(i + 1) * grid.n_phi];
        let w = grid.ring_weights[i] / grid.n_phi as f64;
        for m in -lm..=lm {
            let am = m.unsigned_abs() as usize;
            let mut fm = Complex64::new(0.0, 0.0);
            for (z, &phi) in row.iter().zip(&grid.longitudes) {
                fm += z * Complex64::from_polar(1.0, -(m as f64) * phi);
            }
            fm *= w;
            for l in am..=l_max {
                let cur = out.get(l, m);
                out.set(l, m, cur + fm * leg.get(l, am));
            }
        }
    }
    if values.is_real() {
        out.symmetrize();
    }
    Ok(out)
}

fn evaluate_with_table(coeffs: &HarmonicCoefficients, table: &PhiTable) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..=coeffs.l_max() {
        for (a, phi) in coeffs.block(l).iter().zip(table.block(l)) {
            acc += a * phi;
        }
    }
    acc
}

/// `Σ_lm a_lm φ_lm(x)` at a single point.
pub fn evaluate(coeffs: &HarmonicCoefficients, colatitude: f64, longitude: f64) -> Complex64 {
    evaluate_with_table(coeffs, &PhiTable::new(coeffs.l_max(), colatitude, longitude))
}

/// Real part of [`evaluate`], checked against the same `1e-10` residual as
/// synthesis.
pub fn evaluate_real(coeffs: &HarmonicCoefficients, colatitude: f64, longitude: f64) -> Result<f64> {
    let z = evaluate(coeffs, colatitude, longitude);
    if z.im.abs() > SYNTH_IMAG_TOLERANCE {
        return Err(Error::numeric(format!("point value has imaginary residual {:e}", z.im)));
    }
    Ok(z.re)
}

/// `R(x, y) = Σ_l λ_l (2l + 1) P_l(x·y)`.
pub fn covariance_kernel(spectrum: &AngularPowerSpectrum, cos_angle: f64) -> Result<f64> {
    if cos_angle.is_nan() || cos_angle.abs() > 1.0 + 1e-12 {
        return Err(Error::domain(format!("cosine {cos_angle} outside [-1, 1]")));
    }
    let x = cos_angle.clamp(-1.0, 1.0);
    let (mut p_prev, mut p) = (1.0, x);
    let mut sum = 0.0;
    for (l, lambda) in spectrum.lambdas().iter().enumerate() {
        let pl = match l {
            0 => 1.0,
            1 => x,
            _ => {
                let lf = l as f64;
                let next = ((2.0 * lf - 1.0) * x * p - (lf - 1.0) * p_prev) / lf;
                p_prev = p;
                p = next;
                next
            }
        };
        sum += lambda * (2 * l + 1) as f64 * pl;
    }
    Ok(sum)
}
