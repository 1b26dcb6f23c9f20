//! Power calibration of the non-Gaussian arms.
//!
//! The committed sample sizes below come from running [`run_pilot`] with the
//! canonical arms of this module at seed [`PILOT_SEED`] (see the `pilot`
//! example and the `pilot` subcommand). Acceptance runs use other seeds.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::experiment::{
    run_batch, ExperimentSpec, IndependenceConfig, InvarianceConfig, OrderSelection, ProbePoint, RotationSpec, Space,
    SpectrumSpec,
};
use crate::error::{Error, Result};
use crate::field::CoefficientLaw;
use crate::repr::EulerRotation;
use crate::rotation::SpherePoint;

/// Realizations for the sphere independence experiment at degree 2.
pub const CALIBRATED_N_INDEPENDENCE: usize = 400;

/// Realizations per batch for the sphere invariance experiment.
pub const CALIBRATED_N_INVARIANCE: usize = 600;

pub const PILOT_SEED: u64 = 7_000_000;

/// Permutations used by the canonical arms.
pub const ARM_PERMUTATIONS: usize = 99;

/// Sphere, degree 2, orders (1, 2), witness rotation found by search.
pub fn independence_arm(law: CoefficientLaw, n: usize, alpha: f64, seed: u64) -> ExperimentSpec {
    ExperimentSpec::Independence(IndependenceConfig {
        space: Space::Sphere,
        degree: 2,
        law,
        rotation: RotationSpec::Search,
        torus_shift: 1.0,
        n_realizations: n,
        orders: OrderSelection::Pair(1, 2),
        n_perm: ARM_PERMUTATIONS,
        alpha,
        seed,
    })
}

/// Circle, `k_max = 3`, shift `θ' = 1`, orders (1, 2).
pub fn torus_independence_arm(law: CoefficientLaw, n: usize, alpha: f64, seed: u64) -> ExperimentSpec {
    ExperimentSpec::Independence(IndependenceConfig {
        space: Space::Torus,
        degree: 3,
        law,
        rotation: RotationSpec::Search,
        torus_shift: 1.0,
        n_realizations: n,
        orders: OrderSelection::Pair(1, 2),
        n_perm: ARM_PERMUTATIONS,
        alpha,
        seed,
    })
}

/// Sphere, single degree `ℓ = 4` (`λ_4 = 1`, all others zero), probes at the
/// north pole and at `(π/2, 0)`, rotation `(0, π/2, 0)`.
///
/// At the pole only `a_{40}` contributes, so under a non-Gaussian law the
/// first coordinate of the unrotated batch carries the raw coefficient law
/// while the rotated batch sees a mixture of all orders.
pub fn invariance_arm(law: CoefficientLaw, n: usize, alpha: f64, seed: u64) -> ExperimentSpec {
    ExperimentSpec::Invariance(InvarianceConfig {
        space: Space::Sphere,
        l_max: INVARIANCE_DEGREE,
        spectrum: SpectrumSpec::Explicit(single_degree(INVARIANCE_DEGREE)),
        include_monopole: false,
        law,
        rotation: EulerRotation { alpha: 0.0, beta: PI / 2.0, gamma: 0.0 },
        torus_shift: 1.0,
        probes: vec![
            ProbePoint::Sphere(SpherePoint::north_pole()),
            ProbePoint::Sphere(SpherePoint { colatitude: PI / 2.0, longitude: 0.0 }),
        ],
        n_per_batch: n,
        n_perm: ARM_PERMUTATIONS,
        alpha,
        seed,
    })
}

pub const INVARIANCE_DEGREE: usize = 4;

fn single_degree(l: usize) -> Vec<f64> {
    let mut v = vec![0.0; l + 1];
    v[l] = 1.0;
    v
}

/// Circle, `k_max = 3`, flat spectrum without `a_0`, probes at 0 and 1,
/// shift `θ' = 1`.
pub fn torus_invariance_arm(law: CoefficientLaw, n: usize, alpha: f64, seed: u64) -> ExperimentSpec {
    ExperimentSpec::Invariance(InvarianceConfig {
        space: Space::Torus,
        l_max: 3,
        spectrum: SpectrumSpec::Flat,
        include_monopole: false,
        law,
        rotation: EulerRotation::identity(),
        torus_shift: 1.0,
        probes: vec![ProbePoint::Circle(0.0), ProbePoint::Circle(1.0)],
        n_per_batch: n,
        n_perm: ARM_PERMUTATIONS,
        alpha,
        seed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PilotConfig {
    /// Arm to calibrate; its sample size is replaced by each candidate.
    pub experiment: ExperimentSpec,
    /// Candidate sample sizes, tried in increasing order.
    pub candidates: Vec<usize>,
    pub runs: usize,
    pub target_power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PilotRow {
    pub n: usize,
    pub rejections: usize,
    pub runs: usize,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PilotOutcome {
    pub experiment: String,
    pub alpha: f64,
    pub target_power: f64,
    pub rows: Vec<PilotRow>,
    /// Smallest candidate whose empirical power reached the target.
    pub calibrated_n: Option<usize>,
}

/// Runs batches at increasing sample sizes until the rejection rate reaches
/// `target_power`.
pub fn run_pilot(cfg: &PilotConfig) -> Result<PilotOutcome> {
    if cfg.candidates.is_empty() {
        return Err(Error::Validation("pilot needs at least one candidate size".into()));
    }
    if !(0.0..=1.0).contains(&cfg.target_power) {
        return Err(Error::Validation(format!("target power {} outside [0, 1]", cfg.target_power)));
    }
    let mut candidates = cfg.candidates.clone();
    candidates.sort_unstable();
    candidates.dedup();
    let mut rows = Vec::new();
    let mut calibrated_n = None;
    for n in candidates {
        let batch = run_batch(&cfg.experiment.with_sample_size(n), cfg.runs)?;
        rows.push(PilotRow { n, rejections: batch.rejections, runs: cfg.runs, power: batch.rejection_rate });
        if batch.rejection_rate >= cfg.target_power {
            calibrated_n = Some(n);
            break;
        }
    }
    Ok(PilotOutcome {
        experiment: cfg.experiment.name().to_string(),
        alpha: cfg.experiment.alpha(),
        target_power: cfg.target_power,
        rows,
        calibrated_n,
    })
}
