use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

/// Complex bilinear form `B(v, w) = vᵀ B w` on `C²` (no conjugation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilinearForm2(pub Matrix2<Complex64>);

impl BilinearForm2 {
    pub fn identity() -> Self {
        Self(Matrix2::identity())
    }

    pub fn eval(&self, v: &Vector2<Complex64>, w: &Vector2<Complex64>) -> Complex64 {
        (v.transpose() * self.0 * w)[(0, 0)]
    }

    pub fn quadratic(&self, v: &Vector2<Complex64>) -> Complex64 {
        self.eval(v, v)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (self.0[(0, 1)] - self.0[(1, 0)]).norm() <= tol
    }
}

/// `B + Bᵀ`, which has the same zero set of the quadratic form (the form
/// itself is doubled).
pub fn symmetrize_bilinear(b: &BilinearForm2) -> BilinearForm2 {
    BilinearForm2(b.0 + b.0.transpose())
}

/// Unit vector `v` with `vᵀ B v = 0` for a symmetric `B`.
///
/// Writes `v ∝ (1, t)` (or `(s, 1)` when `|B₁₁| > |B₂₂|`) and takes the
/// smaller-magnitude root of the quadratic, which is the well-conditioned one.
/// For `B = I` this is `(1, i)/√2`, i.e. `w = v₁ + i v₂` for the orthonormal
/// pair `v₁ = e₁`, `v₂ = e₂`. A degenerate nonzero `B` yields its null vector;
/// `B = 0` yields `(1, 0)`.
pub fn isotropic_vector(b: &BilinearForm2) -> Vector2<Complex64> {
    let m = b.0;
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    if m.iter().all(|z| *z == zero) {
        return Vector2::new(one, zero);
    }
    let b12 = 0.5 * (m[(0, 1)] + m[(1, 0)]);
    let swap = m[(0, 0)].norm() > m[(1, 1)].norm();
    // lead * t² + 2 b12 t + tail = 0
    let (lead, tail) = if swap { (m[(0, 0)], m[(1, 1)]) } else { (m[(1, 1)], m[(0, 0)]) };
    let root = (b12 * b12 - lead * tail).sqrt();
    let q = if (b12 + root).norm() >= (b12 - root).norm() { -(b12 + root) } else { -(b12 - root) };
    let t = if q == zero { zero } else { tail / q };
    let v = if swap { Vector2::new(t, one) } else { Vector2::new(one, t) };
    v / Complex64::new(v.norm(), 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, Domain};
    use rand::Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_form<R: Rng>(rng: &mut R) -> BilinearForm2 {
        BilinearForm2(Matrix2::from_fn(|_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))))
    }

    #[test]
    fn symmetrization() {
        let mut rng = stream(1, Domain::Validation, 0);
        let b = random_form(&mut rng);
        let s = symmetrize_bilinear(&b);
        assert!(s.is_symmetric(0.0));
        let sym = symmetrize_bilinear(&BilinearForm2(s.0));
        assert_eq!(sym.0, s.0 * c(2.0, 0.0));
        let anti = BilinearForm2(b.0 - b.0.transpose());
        assert!(symmetrize_bilinear(&anti).0.iter().all(|z| z.norm() == 0.0));
        for _ in 0..50 {
            let v = Vector2::new(c(rng.random(), rng.random()), c(rng.random(), rng.random()));
            assert!((s.quadratic(&v) - 2.0 * b.quadratic(&v)).norm() < 1e-14);
        }
    }

    #[test]
    fn identity_gives_one_i() {
        let v = isotropic_vector(&BilinearForm2::identity());
        let ratio = v[1] / v[0];
        assert!((ratio - c(0.0, 1.0)).norm() < 1e-15);
        assert!((v.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_and_zero_forms() {
        let d = BilinearForm2(Matrix2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)));
        let v = isotropic_vector(&d);
        assert!((v[0].norm()) < 1e-15 && (v[1].norm() - 1.0).abs() < 1e-15);
        let z = isotropic_vector(&BilinearForm2(Matrix2::zeros()));
        assert_eq!(z, Vector2::new(c(1.0, 0.0), c(0.0, 0.0)));
    }

    #[test]
    fn random_symmetric_forms() {
        let mut rng = stream(2, Domain::Validation, 0);
        for _ in 0..100 {
            let b = symmetrize_bilinear(&random_form(&mut rng));
            let v = isotropic_vector(&b);
            assert!((v.norm() - 1.0).abs() < 1e-14);
            assert!(b.quadratic(&v).norm() < 1e-12, "{}", b.quadratic(&v));
        }
    }
}
