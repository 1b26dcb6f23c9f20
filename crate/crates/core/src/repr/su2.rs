//! The defining representation of SU(2).

use nalgebra::{Matrix2, Matrix3};
use num_complex::Complex64;

use super::euler::EulerRotation;

/// A 2x2 special unitary matrix
///
/// ```text
/// U = | a  b |
///     | c  d |
/// ```
///
/// with `d = conj(a)` and `b = -conj(c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2(pub Matrix2<Complex64>);

impl Su2 {
    pub fn identity() -> Self {
        Su2(Matrix2::identity())
    }

    pub fn a(&self) -> Complex64 {
        self.0[(0, 0)]
    }

    pub fn b(&self) -> Complex64 {
        self.0[(0, 1)]
    }

    pub fn c(&self) -> Complex64 {
        self.0[(1, 0)]
    }

    pub fn d(&self) -> Complex64 {
        self.0[(1, 1)]
    }

    pub fn det(&self) -> Complex64 {
        self.a() * self.d() - self.b() * self.c()
    }

    pub fn mul(&self, other: &Su2) -> Su2 {
        Su2(self.0 * other.0)
    }

    pub fn inverse(&self) -> Su2 {
        Su2(self.0.adjoint())
    }

    /// Image in SO(3) under the double cover, `R_ij = ½ tr(σ_i U σ_j U†)`.
    pub fn rotation(&self) -> Matrix3<f64> {
        let i = Complex64::i();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let pauli = [
            Matrix2::new(zero, one, one, zero),
            Matrix2::new(zero, -i, i, zero),
            Matrix2::new(one, zero, zero, -one),
        ];
        let u = self.0;
        let ud = u.adjoint();
        Matrix3::from_fn(|r, c| 0.5 * (pauli[r] * u * pauli[c] * ud).trace().re)
    }
}

/// `U(g) = e^{-iασ_z/2} e^{-iβσ_y/2} e^{-iγσ_z/2}`, the spin-½ Wigner matrix.
/// Covers SU(2) once for `gamma ∈ [0, 4π)`.
pub fn su2_matrix(g: &EulerRotation) -> Su2 {
    let (s, c) = (0.5 * g.beta).sin_cos();
    let plus = 0.5 * (g.alpha + g.gamma);
    let minus = 0.5 * (g.alpha - g.gamma);
    Su2(Matrix2::new(
        Complex64::from_polar(c, -plus),
        -Complex64::from_polar(s, -minus),
        Complex64::from_polar(s, minus),
        Complex64::from_polar(c, plus),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_element() {
        let u = su2_matrix(&EulerRotation::identity());
        assert!((u.0 - Matrix2::identity()).iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn special_unitary_and_conjugate_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let g = EulerRotation::haar_random(&mut rng, true);
            let u = su2_matrix(&g);
            assert!((u.det() - 1.0).norm() < 1e-14);
            assert!((u.a().conj() - u.d()).norm() < 1e-14);
            assert!((u.b() + u.c().conj()).norm() < 1e-14);
            let uu = u.0 * u.0.adjoint();
            assert!((uu - Matrix2::identity()).iter().all(|z| z.norm() < 1e-14));
        }
    }

    #[test]
    fn covers_the_euler_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let g = EulerRotation::haar_random(&mut rng, true);
            let r = su2_matrix(&g).rotation();
            assert!((r - g.matrix()).abs().max() < 1e-13);
        }
    }

    #[test]
    fn gamma_shift_by_two_pi_flips_sign() {
        let g = EulerRotation::new(0.4, 1.1, 0.7).unwrap();
        let h = EulerRotation::new(0.4, 1.1, 0.7 + 2.0 * std::f64::consts::PI).unwrap();
        let (u, v) = (su2_matrix(&g), su2_matrix(&h));
        assert!((u.0 + v.0).iter().all(|z| z.norm() < 1e-14));
    }
}
