use rand::seq::SliceRandom;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::{stream, Domain};

/// Smallest permutation count accepted by the permutation tests.
pub const MIN_PERMUTATIONS: usize = 99;

/// Permutation number `index` of `0..n`, drawn from its own stream so that
/// the set of permutations does not depend on evaluation order.
pub fn permutation(n: usize, seed: u64, index: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut stream(seed, Domain::Permutation, index));
    p
}

/// `(1 + #{b : T_b >= T_obs}) / (n_perm + 1)`, evaluating `statistic` on each
/// permutation in parallel. A relative slack of `1e-12` on the comparison keeps
/// the p-value conservative when a permuted value reproduces the observed one
/// up to rounding.
pub(crate) fn permutation_p_value<F>(observed: f64, n: usize, n_perm: usize, seed: u64, statistic: F) -> Result<f64>
where
    F: Fn(&[usize]) -> f64 + Sync,
{
    if n_perm < MIN_PERMUTATIONS {
        return Err(Error::domain(format!("n_perm must be at least {MIN_PERMUTATIONS}, got {n_perm}")));
    }
    let threshold = observed - 1e-12 * observed.abs();
    let exceed = (0..n_perm as u64)
        .into_par_iter()
        .filter(|b| statistic(&permutation(n, seed, *b)) >= threshold)
        .count();
    Ok((1 + exceed) as f64 / (n_perm + 1) as f64)
}
