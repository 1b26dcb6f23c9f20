//! Spherical harmonics normalized against the uniform probability measure on
//! the sphere, and the conjugation-compatible basis built from them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::legendre::NormalizedLegendre;
use crate::error::{Error, Result};

/// Degree/order pair `(l, m)` with `-l <= m <= l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SphericalIndex {
    degree: usize,
    order: i64,
}

impl SphericalIndex {
    pub fn new(degree: usize, order: i64) -> Result<Self> {
        if order.unsigned_abs() as usize > degree {
            return Err(Error::domain(format!(
                "order m={order} outside -{degree}..={degree}"
            )));
        }
        Ok(Self { degree, order })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> i64 {
        self.order
    }
}

/// `Y_lm(θ, φ)` scaled so that `∫ |Y_lm|² dm = 1` for the probability measure
/// `m`; this is `sqrt(4π)` times the textbook harmonic, Condon-Shortley phase
/// included. Negative orders follow `Y_{l,-m} = (-1)^m conj(Y_{lm})`.
pub fn spherical_harmonic(idx: SphericalIndex, colatitude: f64, longitude: f64) -> Complex64 {
    let table = NormalizedLegendre::new(idx.degree, colatitude.cos());
    harmonic_from_table(&table, idx.degree, idx.order, longitude)
}

fn harmonic_from_table(table: &NormalizedLegendre, l: usize, m: i64, longitude: f64) -> Complex64 {
    let am = m.unsigned_abs() as usize;
    let positive = Complex64::from_polar(table.get(l, am), am as f64 * longitude);
    if m >= 0 {
        positive
    } else if am.is_multiple_of(2) {
        positive.conj()
    } else {
        -positive.conj()
    }
}

/// Conjugation-compatible basis element: `φ_lm = Y_lm` for `m >= 0` and
/// `φ_lm = (-1)^m Y_lm` for `m < 0`, so that `conj(φ_lm) = φ_{l,-m}`.
pub fn conj_compatible_phi(idx: SphericalIndex, colatitude: f64, longitude: f64) -> Complex64 {
    let table = NormalizedLegendre::new(idx.degree, colatitude.cos());
    phi_from_table(&table, idx.degree, idx.order, longitude)
}

#[inline]
fn phi_from_table(table: &NormalizedLegendre, l: usize, m: i64, longitude: f64) -> Complex64 {
    let am = m.unsigned_abs() as usize;
    let positive = Complex64::from_polar(table.get(l, am), am as f64 * longitude);
    if m >= 0 {
        positive
    } else {
        positive.conj()
    }
}

/// All `φ_lm` for `l <= l_max` at one point, stored block by block with order
/// `m` at offset `m + l` inside block `l`.
#[derive(Debug, Clone)]
pub struct PhiTable {
    l_max: usize,
    values: Vec<Complex64>,
}

impl PhiTable {
    pub fn new(l_max: usize, colatitude: f64, longitude: f64) -> Self {
        let legendre = NormalizedLegendre::new(l_max, colatitude.cos());
        let mut values = Vec::with_capacity((l_max + 1) * (l_max + 1));
        let phases: Vec<Complex64> = (0..=l_max)
            .map(|m| Complex64::from_polar(1.0, m as f64 * longitude))
            .collect();
        for l in 0..=l_max {
            for m in -(l as i64)..=(l as i64) {
                let am = m.unsigned_abs() as usize;
                let v = phases[am] * legendre.get(l, am);
                values.push(if m >= 0 { v } else { v.conj() });
            }
        }
        Self { l_max, values }
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    /// Values `φ_{l,-l..=l}`.
    pub fn block(&self, l: usize) -> &[Complex64] {
        &self.values[l * l..(l + 1) * (l + 1)]
    }

    pub fn get(&self, l: usize, m: i64) -> Complex64 {
        self.values[l * l + (m + l as i64) as usize]
    }
}

/// Character `e^{ikθ}` of the circle group.
pub fn torus_character(k: i64, theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, k as f64 * theta)
}
