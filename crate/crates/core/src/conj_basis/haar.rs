//! Functions on SU(2) given as evaluable handles, and their Haar inner products.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::Result;
use crate::grid::Su2Grid;
use crate::repr::Su2;

/// A complex function on SU(2).
pub type SuFunction = Arc<dyn Fn(&Su2) -> Complex64 + Send + Sync>;

pub fn su_function(f: impl Fn(&Su2) -> Complex64 + Send + Sync + 'static) -> SuFunction {
    Arc::new(f)
}

/// Pointwise complex conjugate of `f`.
pub fn conjugate(f: &SuFunction) -> SuFunction {
    let f = Arc::clone(f);
    Arc::new(move |u| f(u).conj())
}

/// `∫ f conj(h) dU` for the normalized Haar measure, with the product rule of
/// [`Su2Grid`] at the given order.
pub fn haar_inner_product(f: &SuFunction, h: &SuFunction, quadrature_order: usize) -> Result<Complex64> {
    let grid = Su2Grid::new(quadrature_order)?;
    Ok(grid.integrate(|u| f(u) * h(u).conj()))
}

/// Entries `U_{0,col}`, `U_{1,col}` of one column of the fundamental
/// representation. Each column spans a left-invariant copy of the
/// fundamental; column 0 is `span{a, c}`, column 1 is `span{b, d}`.
pub fn fundamental_column(col: usize) -> Vec<SuFunction> {
    (0..2).map(|row| su_function(move |u: &Su2| u.0[(row, col)])).collect()
}

/// `U ↦ (R(U) e_z)_i` for `i = x, y, z`: the degree-1 spherical harmonics
/// pulled back along `U ↦ R(U)·north pole`. Real valued, so the span equals
/// its conjugate.
pub fn degree_one_harmonics() -> Vec<SuFunction> {
    (0..3)
        .map(|i| su_function(move |u: &Su2| Complex64::new(u.rotation()[(i, 2)], 0.0)))
        .collect()
}
