//! Wigner d and D matrices of the integer-spin irreducible representations.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::euler::EulerRotation;

/// Matrix of a degree-`l` representation, rows and columns indexed by orders
/// `-l..=l` (offset `l` in storage).
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrix {
    degree: usize,
    entries: DMatrix<Complex64>,
}

impl RepMatrix {
    pub fn identity(degree: usize) -> Self {
        Self {
            degree,
            entries: DMatrix::identity(2 * degree + 1, 2 * degree + 1),
        }
    }

    pub fn from_entries(degree: usize, entries: DMatrix<Complex64>) -> Self {
        assert_eq!(entries.nrows(), 2 * degree + 1);
        assert_eq!(entries.ncols(), 2 * degree + 1);
        Self { degree, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<Complex64> {
        self.entries
    }

    /// Entry `(k, m)` with `k, m ∈ -l..=l`.
    #[inline]
    pub fn get(&self, k: i64, m: i64) -> Complex64 {
        let l = self.degree as i64;
        self.entries[((k + l) as usize, (m + l) as usize)]
    }

    /// `max |M M^† - I|`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.entries.nrows();
        let prod = &self.entries * self.entries.adjoint();
        (prod - DMatrix::<Complex64>::identity(n, n))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// `max |self - other|`.
    pub fn max_abs_diff(&self, other: &RepMatrix) -> f64 {
        (&self.entries - &other.entries)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

fn ln_factorials(n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    for k in 1..=n {
        out[k] = out[k - 1] + (k as f64).ln();
    }
    out
}

/// Single-term closed form of `d^j_{m'm}(β)` valid when `j = max(|m'|, |m|)`.
fn sectoral_seed(j: i64, mp: i64, m: i64, half_cos: f64, half_sin: f64, lnf: &[f64]) -> f64 {
    let s_lo = 0.max(m - mp);
    let s_hi = (j + m).min(j - mp);
    debug_assert_eq!(s_lo, s_hi);
    let s = s_lo;
    let f = |n: i64| lnf[n as usize];
    let ln_mag = 0.5 * (f(j + mp) + f(j - mp) + f(j + m) + f(j - m))
        - f(j + m - s)
        - f(s)
        - f(mp - m + s)
        - f(j - mp - s);
    let sign = if (mp - m + s).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let cos_pow = (2 * j + m - mp - 2 * s) as i32;
    let sin_pow = (mp - m + 2 * s) as i32;
    sign * ln_mag.exp() * half_cos.powi(cos_pow) * half_sin.powi(sin_pow)
}

/// Real matrices `d^l(β)` for every `l <= l_max`.
///
/// Each entry `(m', m)` is seeded at `l = max(|m'|, |m|)` and carried upward by
/// the three-term recursion in the degree, which avoids the large factorials of
/// the explicit sum.
pub fn wigner_small_d_all(l_max: usize, beta: f64) -> Vec<DMatrix<f64>> {
    let mut out: Vec<DMatrix<f64>> =
        (0..=l_max).map(|l| DMatrix::zeros(2 * l + 1, 2 * l + 1)).collect();
    let lnf = ln_factorials(2 * l_max + 2);
    let (half_sin, half_cos) = (0.5 * beta).sin_cos();
    let cb = beta.cos();
    let lm = l_max as i64;

    for mp in -lm..=lm {
        for m in -lm..=lm {
            let j0 = mp.abs().max(m.abs());
            let seed = sectoral_seed(j0, mp, m, half_cos, half_sin, &lnf);
            out[j0 as usize][((mp + j0) as usize, (m + j0) as usize)] = seed;

            let (mpf, mf) = (mp as f64, m as f64);
            let mut prev = 0.0;
            let mut cur = seed;
            for jj in j0..lm {
                let j = jj as f64;
                let j1 = j + 1.0;
                let scale = j1 * (2.0 * j + 1.0) / ((j1 * j1 - mf * mf) * (j1 * j1 - mpf * mpf)).sqrt();
                let shift = if jj == 0 { 0.0 } else { mf * mpf / (j * j1) };
                let mut next = (cb - shift) * cur;
                if jj > j0 {
                    let back = ((j * j - mf * mf) * (j * j - mpf * mpf)).sqrt() / (j * (2.0 * j + 1.0));
                    next -= back * prev;
                }
                next *= scale;
                let l = (jj + 1) as usize;
                out[l][((mp + jj + 1) as usize, (m + jj + 1) as usize)] = next;
                prev = cur;
                cur = next;
            }
        }
    }
    out
}

/// Real orthogonal matrix `d^l(β)`; `d^l(0)` is the identity.
pub fn wigner_small_d(l: usize, beta: f64) -> RepMatrix {
    let d = wigner_small_d_all(l, beta).pop().expect("l_max + 1 blocks");
    RepMatrix::from_entries(l, d.map(|x| Complex64::new(x, 0.0)))
}

fn dress(l: usize, d: &DMatrix<f64>, g: &EulerRotation) -> RepMatrix {
    let li = l as i64;
    let n = 2 * l + 1;
    let left: Vec<Complex64> = (-li..=li).map(|k| Complex64::from_polar(1.0, -(k as f64) * g.alpha)).collect();
    let right: Vec<Complex64> = (-li..=li).map(|m| Complex64::from_polar(1.0, -(m as f64) * g.gamma)).collect();
    let entries = DMatrix::from_fn(n, n, |r, c| left[r] * d[(r, c)] * right[c]);
    RepMatrix::from_entries(l, entries)
}

/// `D^l_{km}(g) = e^{-ikα} d^l_{km}(β) e^{-imγ}` in the `Y_lm` basis.
///
/// With this convention `Y_lm(g⁻¹x) = Σ_k Y_lk(x) D^l_{km}(g)` and
/// `D(g₁) D(g₂) = D(g₁ ∘ g₂)`.
pub fn wigner_d(l: usize, g: &EulerRotation) -> RepMatrix {
    let d = wigner_small_d_all(l, g.beta).pop().expect("l_max + 1 blocks");
    dress(l, &d, g)
}

/// `D^l(g)` for every `l <= l_max`.
pub fn wigner_d_all(l_max: usize, g: &EulerRotation) -> Vec<RepMatrix> {
    wigner_small_d_all(l_max, g.beta)
        .iter()
        .enumerate()
        .map(|(l, d)| dress(l, d, g))
        .collect()
}

#[inline]
fn phi_sign(m: i64) -> f64 {
    if m < 0 && m % 2 != 0 {
        -1.0
    } else {
        1.0
    }
}

fn to_phi_basis(d: RepMatrix) -> RepMatrix {
    let l = d.degree as i64;
    let mut entries = d.entries;
    for r in 0..entries.nrows() {
        for c in 0..entries.ncols() {
            let s = phi_sign(r as i64 - l) * phi_sign(c as i64 - l);
            if s < 0.0 {
                entries[(r, c)] = -entries[(r, c)];
            }
        }
    }
    RepMatrix::from_entries(d.degree, entries)
}

/// Representation matrix in the conjugation-compatible basis `φ_lm`:
/// `S D S` with `S = diag((-1)^m for m < 0, 1 otherwise)`.
///
/// Satisfies `conj(D̃_{k,m}) = D̃_{-k,-m}` and `|D̃| = |D|` entrywise.
pub fn rep_matrix_phi_basis(l: usize, g: &EulerRotation) -> RepMatrix {
    to_phi_basis(wigner_d(l, g))
}

/// [`rep_matrix_phi_basis`] for every `l <= l_max`.
pub fn rep_matrices_phi_basis(l_max: usize, g: &EulerRotation) -> Vec<RepMatrix> {
    wigner_d_all(l_max, g).into_iter().map(to_phi_basis).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn fact(n: i64) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    /// Direct Wigner sum, usable for small degrees only.
    fn explicit_d(j: i64, mp: i64, m: i64, beta: f64) -> f64 {
        let (c, s) = ((beta / 2.0).cos(), (beta / 2.0).sin());
        let pre = (fact(j + mp) * fact(j - mp) * fact(j + m) * fact(j - m)).sqrt();
        let mut acc = 0.0;
        for k in 0..=(2 * j) {
            let dens = [j + m - k, k, mp - m + k, j - mp - k];
            if dens.iter().any(|&x| x < 0) {
                continue;
            }
            let sign = if (mp - m + k) % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * c.powi((2 * j + m - mp - 2 * k) as i32) * s.powi((mp - m + 2 * k) as i32)
                / dens.iter().map(|&x| fact(x)).product::<f64>();
        }
        pre * acc
    }

    #[test]
    fn recursion_matches_explicit_sum() {
        for &beta in &[0.0, 0.3, 1.0, PI / 2.0, 2.5, PI] {
            let all = wigner_small_d_all(8, beta);
            for (l, d) in all.iter().enumerate() {
                let li = l as i64;
                for mp in -li..=li {
                    for m in -li..=li {
                        let want = explicit_d(li, mp, m, beta);
                        let got = d[((mp + li) as usize, (m + li) as usize)];
                        assert!((got - want).abs() < 1e-12, "l={l} m'={mp} m={m} β={beta}: {got} vs {want}");
                    }
                }
            }
        }
    }

    #[test]
    fn identity_at_zero_angle() {
        let d = wigner_small_d(3, 0.0);
        assert!(d.max_abs_diff(&RepMatrix::identity(3)) < 1e-15);
        let big = wigner_d(5, &EulerRotation::identity());
        assert!(big.max_abs_diff(&RepMatrix::identity(5)) < 1e-15);
    }

    #[test]
    fn degree_one_closed_form() {
        let beta = PI / 3.0;
        let d = wigner_small_d(1, beta);
        assert!((d.get(1, 1).re - 0.75).abs() < 1e-15);
        assert!((d.get(-1, 1).re - 0.25).abs() < 1e-15);
        assert!((d.get(1, 0).re + beta.sin() / 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn orthogonality_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let g = EulerRotation::haar_random(&mut rng, false);
            for l in 0..=16 {
                assert!(wigner_small_d(l, g.beta).unitarity_defect() < 1e-12);
            }
            for (l, d) in wigner_d_all(16, &g).iter().enumerate() {
                assert!(d.unitarity_defect() < 1e-12, "l={l}");
            }
        }
    }

    #[test]
    fn homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let g1 = EulerRotation::haar_random(&mut rng, false);
            let g2 = EulerRotation::haar_random(&mut rng, false);
            let g12 = g1.compose(&g2);
            for l in 0..=8 {
                let lhs = wigner_d(l, &g1).entries() * wigner_d(l, &g2).entries();
                let rhs = wigner_d(l, &g12);
                let err = (lhs - rhs.entries()).iter().map(|z| z.norm()).fold(0.0, f64::max);
                assert!(err < 1e-10, "l={l}: {err}");
            }
        }
    }

    #[test]
    fn phi_basis_moduli_and_reality_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let g = EulerRotation::haar_random(&mut rng, false);
            for l in 0..=8usize {
                let d = wigner_d(l, &g);
                let dt = rep_matrix_phi_basis(l, &g);
                let li = l as i64;
                for k in -li..=li {
                    for m in -li..=li {
                        assert!((d.get(k, m).norm() - dt.get(k, m).norm()).abs() < 1e-13);
                        assert!((dt.get(k, m).conj() - dt.get(-k, -m)).norm() < 1e-12);
                    }
                }
            }
        }
        let id = rep_matrix_phi_basis(4, &EulerRotation::identity());
        assert!(id.max_abs_diff(&RepMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn degree_sixty_four_is_finite_and_orthogonal() {
        let d = wigner_small_d(64, 1.234);
        assert!(d.entries().iter().all(|z| z.re.is_finite()));
        assert!(d.unitarity_defect() < 1e-10);
    }
}
