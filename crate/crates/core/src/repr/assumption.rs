//! Numerical check of the modulus-gap condition that makes the rotated
//! coefficient maps non-singular.
//!
//! Under the coefficient rotation `ã_k = Σ_m D̃_{k,m} a_m` with
//! `a_{-m} = conj(a_m)`, the contribution of `a_m` (`m >= 1`) to `ã_{m_i}` is
//! the real-linear map `z ↦ D̃_{m_i,m} z + D̃_{m_i,-m} conj(z)`, which is
//! invertible iff `|D̃_{m_i,m}| ≠ |D̃_{m_i,-m}|`. A witness is a rotation at which
//! every such gap, for `m = 1..=l` and both chosen orders, is non-zero.
//!
//! The `m = 0` term is the same coefficient on both sides and carries no gap,
//! and an order `m_i = 0` always ties (`ã_0` is real), so witnesses need
//! `1 <= m_1 < m_2 <= l` and therefore `l >= 2`.

use serde::{Deserialize, Serialize};

use super::euler::EulerRotation;
use super::wigner::{rep_matrix_phi_basis, wigner_d, RepMatrix};
use crate::error::{Error, Result};
use crate::rng::{self, Domain};

/// Gap threshold separating a genuine modulus difference from round-off.
pub const GAP_TOLERANCE: f64 = 1e-9;

/// Entry modulus below which a matrix coefficient counts as a zero.
pub const ZERO_TOLERANCE: f64 = 1e-9;

/// `||D̃_{m_i,m}| - |D̃_{m_i,-m}||` for one `(m, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapEntry {
    pub m: i64,
    pub order: i64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssumptionReport {
    pub degree: usize,
    /// Rotation certified to satisfy the condition, if any.
    pub witness: Option<EulerRotation>,
    /// Rotation whose gaps are reported (the witness when present, otherwise
    /// the best candidate examined).
    pub rotation: EulerRotation,
    pub orders: (i64, i64),
    pub min_gap: f64,
    pub samples_tried: usize,
    pub gaps: Vec<GapEntry>,
}

fn validate_orders(l: usize, m1: i64, m2: i64) -> Result<()> {
    if !(0 <= m1 && m1 < m2 && m2 <= l as i64) {
        return Err(Error::domain(format!(
            "orders must satisfy 0 <= m1 < m2 <= l, got m1={m1} m2={m2} l={l}"
        )));
    }
    Ok(())
}

fn gap_table(d: &RepMatrix, m1: i64, m2: i64) -> Vec<GapEntry> {
    let l = d.degree() as i64;
    let mut gaps = Vec::with_capacity(2 * l as usize);
    for order in [m1, m2] {
        for m in 1..=l {
            let gap = (d.get(order, m).norm() - d.get(order, -m).norm()).abs();
            gaps.push(GapEntry { m, order, gap });
        }
    }
    gaps
}

fn min_gap(gaps: &[GapEntry]) -> f64 {
    // no m >= 1 terms (l = 0) means nothing was certified
    gaps.iter().map(|e| e.gap).reduce(f64::min).unwrap_or(0.0)
}

/// Evaluates the gap condition at a single rotation.
pub fn check_assumption(l: usize, g: &EulerRotation, m1: i64, m2: i64) -> Result<AssumptionReport> {
    validate_orders(l, m1, m2)?;
    let d = rep_matrix_phi_basis(l, g);
    let gaps = gap_table(&d, m1, m2);
    let min_gap = min_gap(&gaps);
    Ok(AssumptionReport {
        degree: l,
        witness: (min_gap > GAP_TOLERANCE).then_some(*g),
        rotation: *g,
        orders: (m1, m2),
        min_gap,
        samples_tried: 1,
        gaps,
    })
}

/// All admissible order pairs `0 <= m1 < m2 <= l`, lexicographic.
pub fn order_pairs(l: usize) -> Vec<(i64, i64)> {
    let l = l as i64;
    (0..=l).flat_map(|a| ((a + 1)..=l).map(move |b| (a, b))).collect()
}

/// Draws Haar-random rotations (stream `(seed, RotationSearch, k)` for draw
/// `k`) until one is a witness for some order pair, trying the pairs in
/// `orders` or, when `None`, every admissible pair.
///
/// Without a witness the report carries the candidate with the largest
/// minimum gap seen.
pub fn search_witness(
    l: usize,
    orders: Option<(i64, i64)>,
    max_draws: usize,
    seed: u64,
) -> Result<AssumptionReport> {
    let pairs = match orders {
        Some((m1, m2)) => {
            validate_orders(l, m1, m2)?;
            vec![(m1, m2)]
        }
        None => order_pairs(l),
    };
    if pairs.is_empty() {
        return Err(Error::domain(format!("degree l={l} has no order pair")));
    }
    if max_draws == 0 {
        return Err(Error::domain("search needs at least one draw"));
    }

    let mut best: Option<AssumptionReport> = None;
    for k in 0..max_draws {
        let g = EulerRotation::haar_random(&mut rng::stream(seed, Domain::RotationSearch, k as u64), false);
        let d = rep_matrix_phi_basis(l, &g);
        for &(m1, m2) in &pairs {
            let gaps = gap_table(&d, m1, m2);
            let mg = min_gap(&gaps);
            let report = AssumptionReport {
                degree: l,
                witness: (mg > GAP_TOLERANCE).then_some(g),
                rotation: g,
                orders: (m1, m2),
                min_gap: mg,
                samples_tried: k + 1,
                gaps,
            };
            if report.witness.is_some() {
                return Ok(report);
            }
            if best.as_ref().is_none_or(|b| mg > b.min_gap) {
                best = Some(report);
            }
        }
    }
    let mut best = best.expect("at least one candidate");
    best.samples_tried = max_draws;
    Ok(best)
}

/// Fraction of Haar-random rotations at which some entry of `D^l(g)` has
/// modulus below [`ZERO_TOLERANCE`].
pub fn zero_set_probe(l: usize, n_samples: usize, seed: u64) -> Result<f64> {
    if n_samples == 0 {
        return Err(Error::domain("zero_set_probe needs n_samples >= 1"));
    }
    let mut rng = rng::stream(seed, Domain::ZeroSetProbe, l as u64);
    let mut hits = 0usize;
    for _ in 0..n_samples {
        let g = EulerRotation::haar_random(&mut rng, false);
        let d = wigner_d(l, &g);
        if d.entries().iter().any(|z| z.norm() < ZERO_TOLERANCE) {
            hits += 1;
        }
    }
    Ok(hits as f64 / n_samples as f64)
}
