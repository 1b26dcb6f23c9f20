//! Associated Legendre functions.

use crate::error::{Error, Result};

/// Associated Legendre function `P_l^m(x)` including the Condon-Shortley phase
/// `(-1)^m`, evaluated by upward recursion in `l` from the sectoral value.
pub fn assoc_legendre(l: usize, m: usize, x: f64) -> Result<f64> {
    if m > l {
        return Err(Error::domain(format!("order m={m} exceeds degree l={l}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("argument x={x} outside [-1, 1]")));
    }

    let s = ((1.0 - x) * (1.0 + x)).sqrt();
    // P_m^m = (-1)^m (2m-1)!! s^m
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= -((2 * k - 1) as f64) * s;
    }
    if l == m {
        return Ok(pmm);
    }

    let mut prev = pmm;
    let mut cur = x * (2 * m + 1) as f64 * pmm;
    for ll in (m + 2)..=l {
        let next = (x * (2 * ll - 1) as f64 * cur - (ll + m - 1) as f64 * prev) / (ll - m) as f64;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Table of normalized Legendre functions
/// `sqrt((2l+1)(l-m)!/(l+m)!) P_l^m(x)` for `0 <= m <= l <= l_max`.
///
/// The normalization makes `P̄_l^m(cos θ) e^{imφ}` orthonormal with respect to
/// the uniform probability measure on the sphere.
#[derive(Debug, Clone)]
pub struct NormalizedLegendre {
    l_max: usize,
    values: Vec<f64>,
}

impl NormalizedLegendre {
    pub fn new(l_max: usize, x: f64) -> Self {
        let mut values = vec![0.0; (l_max + 1) * (l_max + 2) / 2];
        let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();

        // sectoral seeds P̄_m^m = (-1)^m sqrt((2m+1) prod_{k<=m} (2k-1)/(2k)) s^m
        let mut sectoral = 1.0;
        for m in 0..=l_max {
            if m > 0 {
                sectoral *= -s * (((2 * m - 1) as f64) / ((2 * m) as f64)).sqrt();
            }
            let pmm = sectoral * ((2 * m + 1) as f64).sqrt();
            values[Self::slot(m, m)] = pmm;
            if m == l_max {
                break;
            }
            let mut prev = pmm;
            let mut cur = ((2 * m + 3) as f64).sqrt() * x * pmm;
            values[Self::slot(m + 1, m)] = cur;
            let mut a_prev = ((2 * m + 3) as f64).sqrt();
            for l in (m + 2)..=l_max {
                let lf = l as f64;
                let mf = m as f64;
                let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
                let next = a * (x * cur - prev / a_prev);
                values[Self::slot(l, m)] = next;
                prev = cur;
                cur = next;
                a_prev = a;
            }
        }
        Self { l_max, values }
    }

    #[inline]
    fn slot(l: usize, m: usize) -> usize {
        l * (l + 1) / 2 + m
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    /// Value for `0 <= m <= l <= l_max`.
    #[inline]
    pub fn get(&self, l: usize, m: usize) -> f64 {
        debug_assert!(m <= l && l <= self.l_max);
        self.values[Self::slot(l, m)]
    }
}
