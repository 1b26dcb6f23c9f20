//! Product quadrature for the normalized Haar measure on SU(2).

use std::f64::consts::PI;

use crate::error::Result;
use crate::repr::{su2_matrix, EulerRotation, Su2};

use super::gauss_legendre_nodes;

#[derive(Debug, Clone)]
pub struct Su2Node {
    pub matrix: Su2,
    pub weight: f64,
}

/// Gauss-Legendre in `cos β` (`order` nodes) times trapezoid rules in `α` and
/// `γ` (`2 order + 1` nodes each over `[0, 4π)`, a double cover that makes
/// every matrix entry periodic). Weights sum to 1.
///
/// Exact for `∫ f conj(h) dU` when `f` and `h` are polynomials of total degree
/// at most `order` in the entries of `U`.
#[derive(Debug, Clone)]
pub struct Su2Grid {
    order: usize,
    nodes: Vec<Su2Node>,
}

impl Su2Grid {
    pub fn new(order: usize) -> Result<Self> {
        let (x, w) = gauss_legendre_nodes(order.max(1))?;
        let n = 2 * order + 1;
        let step = 4.0 * PI / n as f64;
        let norm = 0.5 / (n * n) as f64;
        let mut nodes = Vec::with_capacity(x.len() * n * n);
        for (xb, wb) in x.iter().zip(&w) {
            let beta = xb.clamp(-1.0, 1.0).acos();
            for i in 0..n {
                for k in 0..n {
                    let g = EulerRotation { alpha: i as f64 * step, beta, gamma: k as f64 * step };
                    nodes.push(Su2Node { matrix: su2_matrix(&g), weight: wb * norm });
                }
            }
        }
        Ok(Self { order, nodes })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[Su2Node] {
        &self.nodes
    }

    /// `Σ_j w_j f(U_j)`.
    pub fn integrate<T, F>(&self, f: F) -> T
    where
        T: std::iter::Sum<T> + std::ops::Mul<f64, Output = T>,
        F: Fn(&Su2) -> T,
    {
        self.nodes.iter().map(|n| f(&n.matrix) * n.weight).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn weights_sum_to_one() {
        for order in 1..6 {
            let g = Su2Grid::new(order).unwrap();
            let total: f64 = g.nodes().iter().map(|n| n.weight).sum();
            assert!((total - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn fundamental_entries_are_orthogonal() {
        // Schur orthogonality: ∫ U_ij conj(U_kl) dU = δ_ik δ_jl / 2
        let g = Su2Grid::new(4).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let v: Complex64 = g.integrate(|u| u.0[(i, j)] * u.0[(k, l)].conj());
                        let target = if (i, j) == (k, l) { 0.5 } else { 0.0 };
                        assert!((v - target).norm() < 1e-13, "({i}{j},{k}{l}) -> {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn odd_functions_integrate_to_zero() {
        let g = Su2Grid::new(3).unwrap();
        let v: Complex64 = g.integrate(|u| u.a() * u.a() * u.b());
        assert!(v.norm() < 1e-14);
        // ∫ |a|⁴ dU = 1/3 for the Haar measure on SU(2)
        let q: f64 = g.integrate(|u| u.a().norm_sqr().powi(2));
        assert!((q - 1.0 / 3.0).abs() < 1e-13);
    }
}
