//! ZYZ Euler angles for elements of SO(3) and SU(2).

use std::f64::consts::PI;

use nalgebra::Matrix3;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;
const FOUR_PI: f64 = 4.0 * PI;

/// Group element `g = R_z(alpha) R_y(beta) R_z(gamma)`.
///
/// `alpha ∈ [0, 2π)`, `beta ∈ [0, π]`, `gamma ∈ [0, 4π)`. For SO(3) the range
/// `gamma ∈ [2π, 4π)` describes the same rotation as `gamma - 2π`; for SU(2)
/// it is the other preimage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerRotation {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl Default for EulerRotation {
    fn default() -> Self {
        Self::identity()
    }
}

impl EulerRotation {
    pub const fn identity() -> Self {
        Self { alpha: 0.0, beta: 0.0, gamma: 0.0 }
    }

    /// Checked constructor.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let ok = (0.0..TWO_PI).contains(&alpha)
            && (0.0..=PI).contains(&beta)
            && (0.0..FOUR_PI).contains(&gamma);
        if !ok {
            return Err(Error::domain(format!(
                "euler angles ({alpha}, {beta}, {gamma}) outside [0,2π)x[0,π]x[0,4π)"
            )));
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Wraps `alpha` into `[0, 2π)` and `gamma` into `[0, 4π)`; `beta` must
    /// already lie in `[0, π]`.
    pub fn wrapped(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self::new(alpha.rem_euclid(TWO_PI), beta, gamma.rem_euclid(FOUR_PI))
    }

    /// Haar-distributed element: `cos beta` uniform on `[-1, 1]`, `alpha`
    /// uniform on `[0, 2π)`, and `gamma` uniform on `[0, 2π)` (SO(3)) or
    /// `[0, 4π)` (SU(2)).
    pub fn haar_random<R: Rng + ?Sized>(rng: &mut R, su2: bool) -> Self {
        let alpha = rng.random_range(0.0..TWO_PI);
        let z: f64 = rng.random_range(-1.0..=1.0);
        let gamma = rng.random_range(0.0..if su2 { FOUR_PI } else { TWO_PI });
        Self { alpha, beta: z.clamp(-1.0, 1.0).acos(), gamma }
    }

    /// The 3x3 rotation matrix `R_z(alpha) R_y(beta) R_z(gamma)`.
    pub fn matrix(&self) -> Matrix3<f64> {
        rot_z(self.alpha) * rot_y(self.beta) * rot_z(self.gamma)
    }

    /// Euler angles of a rotation matrix. At the poles of the chart
    /// (`sin beta = 0`) the whole azimuth is put into `alpha` and `gamma = 0`.
    pub fn from_matrix(r: &Matrix3<f64>) -> Self {
        let cb = r[(2, 2)].clamp(-1.0, 1.0);
        let sb = (r[(0, 2)].powi(2) + r[(1, 2)].powi(2)).sqrt();
        let beta = sb.atan2(cb);
        let (alpha, gamma) = if sb > 1e-12 {
            (r[(1, 2)].atan2(r[(0, 2)]), r[(2, 1)].atan2(-r[(2, 0)]))
        } else if cb > 0.0 {
            (r[(1, 0)].atan2(r[(0, 0)]), 0.0)
        } else {
            ((-r[(1, 0)]).atan2(-r[(0, 0)]), 0.0)
        };
        Self {
            alpha: alpha.rem_euclid(TWO_PI),
            beta,
            gamma: gamma.rem_euclid(TWO_PI),
        }
    }

    /// `self ∘ other` as rotations (apply `other` first).
    pub fn compose(&self, other: &EulerRotation) -> Self {
        Self::from_matrix(&(self.matrix() * other.matrix()))
    }

    /// Inverse rotation in canonical SO(3) ranges.
    pub fn inverse(&self) -> Self {
        Self::from_matrix(&self.matrix().transpose())
    }
}

fn rot_z(t: f64) -> Matrix3<f64> {
    let (s, c) = t.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

fn rot_y(t: f64) -> Matrix3<f64> {
    let (s, c) = t.sin_cos();
    Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c)
}
