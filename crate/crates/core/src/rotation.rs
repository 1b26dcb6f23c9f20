//! The rotation group acting on points, on coefficients, and on the circle.
//!
//! Rotating a field by `g` means `T ↦ T_g` with `T_g(x) = T(g⁻¹x)`. The
//! coefficient law that realizes this is `ã = D̃(g) a` block by block, where
//! `D̃` is the Wigner matrix in the conjugation-compatible basis; it composes
//! as `rotate(rotate(a, g₁), g₂) = rotate(a, g₂∘g₁)`.

use std::f64::consts::PI;

use nalgebra::{DVector, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{HarmonicCoefficients, TorusCoefficients};
use crate::repr::wigner::rep_matrices_phi_basis;
use crate::repr::EulerRotation;

/// Point on the unit sphere; at the poles the longitude is 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    pub colatitude: f64,
    pub longitude: f64,
}

impl SpherePoint {
    pub fn new(colatitude: f64, longitude: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&colatitude) || !(0.0..2.0 * PI).contains(&longitude) {
            return Err(Error::domain(format!(
                "point ({colatitude}, {longitude}) outside [0,π]×[0,2π)"
            )));
        }
        Ok(Self { colatitude, longitude })
    }

    pub fn north_pole() -> Self {
        Self { colatitude: 0.0, longitude: 0.0 }
    }

    pub fn unit_vector(&self) -> Vector3<f64> {
        let s = self.colatitude.sin();
        Vector3::new(s * self.longitude.cos(), s * self.longitude.sin(), self.colatitude.cos())
    }

    /// Inverse of [`unit_vector`](Self::unit_vector) for a (near-)unit vector.
    pub fn from_vector(v: &Vector3<f64>) -> Self {
        let v = v.normalize();
        let colatitude = v.z.clamp(-1.0, 1.0).acos();
        let rho = v.x.hypot(v.y);
        let longitude = if rho < 1e-15 { 0.0 } else { v.y.atan2(v.x).rem_euclid(2.0 * PI) };
        // rem_euclid can round up to exactly 2π
        let longitude = if longitude >= 2.0 * PI { 0.0 } else { longitude };
        Self { colatitude, longitude }
    }

    /// Cosine of the angle to `other`.
    pub fn cos_angle(&self, other: &SpherePoint) -> f64 {
        self.unit_vector().dot(&other.unit_vector()).clamp(-1.0, 1.0)
    }
}

/// `g⁻¹x`: the transpose of the ZYZ matrix of `g` applied to `x`.
pub fn rotate_point(g: &EulerRotation, p: &SpherePoint) -> SpherePoint {
    SpherePoint::from_vector(&(g.matrix().transpose() * p.unit_vector()))
}

const REALITY_TRAP: f64 = 1e-12;

/// Coefficients of `x ↦ T(g⁻¹x)` given those of `T`.
///
/// Each block is multiplied by `D̃^l(g)`. For real-field input the output is
/// checked against the reality constraint (a violation above `1e-12` relative
/// to the block size means a convention bug and yields [`Error::Numeric`]) and
/// then re-symmetrized exactly.
pub fn rotate_coeffs(coeffs: &HarmonicCoefficients, g: &EulerRotation) -> Result<HarmonicCoefficients> {
    let l_max = coeffs.l_max();
    let reps = rep_matrices_phi_basis(l_max, g);
    let input_real = coeffs.reality_violation() <= REALITY_TRAP;
    let mut out = HarmonicCoefficients::zeros(l_max);
    for (l, rep) in reps.iter().enumerate() {
        let a = DVector::from_column_slice(coeffs.block(l));
        let rotated = rep.entries() * a;
        out.block_mut(l).copy_from_slice(rotated.as_slice());
    }
    if input_real {
        let scale = coeffs.block_power().iter().sum::<f64>().sqrt().max(1.0);
        let violation = out.reality_violation();
        if violation > REALITY_TRAP * scale {
            return Err(Error::numeric(format!(
                "rotated coefficients break the reality constraint by {violation:e}"
            )));
        }
        out.symmetrize();
    }
    Ok(out)
}

/// Circle analogue: coefficients of `θ ↦ T(θ - θ')`, i.e. `a_k ↦ e^{-ikθ'} a_k`.
pub fn rotate_torus_coeffs(coeffs: &TorusCoefficients, theta: f64) -> TorusCoefficients {
    let mut out = coeffs.clone();
    for k in 0..=coeffs.k_max() as i64 {
        out.set_pair(k, coeffs.get(k) * Complex64::from_polar(1.0, -(k as f64) * theta));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{evaluate_torus, sample_coefficients, sample_torus_coefficients, AngularPowerSpectrum, CoefficientLaw};
    use crate::grid::evaluate;
    use crate::rng::{stream, Domain};
    use rand::Rng;

    fn random_point<R: Rng>(rng: &mut R) -> SpherePoint {
        let z: f64 = rng.random_range(-1.0..1.0);
        SpherePoint::new(z.acos(), rng.random_range(0.0..2.0 * PI)).unwrap()
    }

    fn random_coeffs<R: Rng>(l_max: usize, rng: &mut R) -> HarmonicCoefficients {
        let spec = AngularPowerSpectrum::flat(l_max);
        sample_coefficients(&spec, CoefficientLaw::ComplexGaussian, l_max, rng).unwrap()
    }

    #[test]
    fn identity_leaves_points_and_coefficients() {
        let mut rng = stream(1, Domain::Validation, 0);
        let p = random_point(&mut rng);
        let q = rotate_point(&EulerRotation::identity(), &p);
        assert!((p.colatitude - q.colatitude).abs() < 1e-15 && (p.longitude - q.longitude).abs() < 1e-14);
        let a = random_coeffs(6, &mut rng);
        let b = rotate_coeffs(&a, &EulerRotation::identity()).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-14);
    }

    #[test]
    fn quarter_turn_moves_pole_to_equator() {
        let g = EulerRotation::new(0.0, PI / 2.0, 0.0).unwrap();
        let q = rotate_point(&g, &SpherePoint::north_pole());
        // Ry(π/2)ᵀ (0,0,1) = (-1, 0, 0)
        assert!((q.colatitude - PI / 2.0).abs() < 1e-15);
        assert!((q.longitude - PI).abs() < 1e-15);
    }

    #[test]
    fn poles_get_zero_longitude() {
        let g = EulerRotation::new(0.0, PI, 0.0).unwrap();
        let q = rotate_point(&g, &SpherePoint::north_pole());
        assert!((q.colatitude - PI).abs() < 1e-15);
        assert_eq!(q.longitude, 0.0);
    }

    #[test]
    fn rotation_preserves_norm() {
        let mut rng = stream(2, Domain::Validation, 0);
        for _ in 0..50 {
            let g = EulerRotation::haar_random(&mut rng, false);
            let p = random_point(&mut rng);
            let v = g.matrix().transpose() * p.unit_vector();
            assert!((v.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn coefficient_rotation_matches_point_rotation() {
        let mut rng = stream(3, Domain::Validation, 0);
        let mut worst: f64 = 0.0;
        for trial in 0..20 {
            let l_max = 1 + trial % 8;
            let a = random_coeffs(l_max, &mut rng);
            let g = EulerRotation::haar_random(&mut rng, false);
            let x = random_point(&mut rng);
            let rotated = rotate_coeffs(&a, &g).unwrap();
            let lhs = evaluate(&rotated, x.colatitude, x.longitude);
            let y = rotate_point(&g, &x);
            let rhs = evaluate(&a, y.colatitude, y.longitude);
            worst = worst.max((lhs - rhs).norm());
        }
        assert!(worst < 1e-10, "consistency defect {worst}");
    }

    #[test]
    fn double_rotation_composes_left() {
        let mut rng = stream(4, Domain::Validation, 0);
        for _ in 0..10 {
            let a = random_coeffs(6, &mut rng);
            let g1 = EulerRotation::haar_random(&mut rng, false);
            let g2 = EulerRotation::haar_random(&mut rng, false);
            let twice = rotate_coeffs(&rotate_coeffs(&a, &g1).unwrap(), &g2).unwrap();
            let once = rotate_coeffs(&a, &g2.compose(&g1)).unwrap();
            assert!(twice.max_abs_diff(&once) < 1e-10);
        }
    }

    #[test]
    fn rotation_preserves_block_power() {
        let mut rng = stream(5, Domain::Validation, 0);
        let a = random_coeffs(10, &mut rng);
        let g = EulerRotation::haar_random(&mut rng, false);
        let b = rotate_coeffs(&a, &g).unwrap();
        for (p, q) in a.block_power().iter().zip(b.block_power()) {
            assert!((p - q).abs() < 1e-12 * p.max(1.0));
        }
        assert_eq!(b.reality_violation(), 0.0);
    }

    #[test]
    fn torus_rotation_shifts_argument() {
        let spec = AngularPowerSpectrum::flat(5);
        let mut rng = stream(6, Domain::Validation, 0);
        let c = sample_torus_coefficients(&spec, CoefficientLaw::FixedModulusPhase, 5, &mut rng).unwrap();
        assert_eq!(rotate_torus_coeffs(&c, 0.0), c);
        let shift = 1.3;
        let r = rotate_torus_coeffs(&c, shift);
        for &t in &[0.0, 0.8, 3.0, 6.0] {
            let lhs = evaluate_torus(&r, t).unwrap();
            let rhs = evaluate_torus(&c, t - shift).unwrap();
            assert!((lhs - rhs).abs() < 1e-12);
        }
        for k in -5..=5i64 {
            assert!((r.get(k).norm() - c.get(k).norm()).abs() < 1e-15);
        }
    }
}
