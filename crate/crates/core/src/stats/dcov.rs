use super::permutation::permutation_p_value;
use super::sample::{euclidean, SampleMatrix, TestReport};
use crate::error::{Error, Result};

/// Double-centered pairwise distance matrix, row-major `n × n`.
fn centered_distances(x: &SampleMatrix) -> Vec<f64> {
    let n = x.n();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = euclidean(x.row(i), x.row(j));
            a[i * n + j] = d;
            a[j * n + i] = d;
        }
    }
    let row_means: Vec<f64> = (0..n).map(|i| a[i * n..(i + 1) * n].iter().sum::<f64>() / n as f64).collect();
    let grand = row_means.iter().sum::<f64>() / n as f64;
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] += grand - row_means[i] - row_means[j];
        }
    }
    a
}

fn check_pair(x: &SampleMatrix, y: &SampleMatrix) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::domain(format!("sample sizes differ: {} vs {}", x.n(), y.n())));
    }
    Ok(())
}

fn mean_product(a: &[f64], b: &[f64], n: usize) -> f64 {
    a.iter().zip(b).map(|(u, v)| u * v).sum::<f64>() / (n * n) as f64
}

/// Squared sample distance covariance, V-statistic form
/// `(1/n²) Σ_ij A_ij B_ij` with double-centered distance matrices.
pub fn distance_covariance(x: &SampleMatrix, y: &SampleMatrix) -> Result<f64> {
    check_pair(x, y)?;
    Ok(mean_product(&centered_distances(x), &centered_distances(y), x.n()))
}

/// Permutation test of independence between the rows of `x` and `y` based on
/// distance covariance; permutation `b` shuffles the rows of `y` using the
/// stream `(seed, Permutation, b)`.
pub fn independence_test(x: &SampleMatrix, y: &SampleMatrix, n_perm: usize, seed: u64) -> Result<TestReport> {
    check_pair(x, y)?;
    let n = x.n();
    let a = centered_distances(x);
    let b = centered_distances(y);
    let observed = mean_product(&a, &b, n);
    let p = permutation_p_value(observed, n, n_perm, seed, |perm| {
        let mut s = 0.0;
        for i in 0..n {
            let ai = &a[i * n..(i + 1) * n];
            let bi = &b[perm[i] * n..(perm[i] + 1) * n];
            s += ai.iter().zip(perm).map(|(u, pj)| u * bi[*pj]).sum::<f64>();
        }
        s / (n * n) as f64
    })?;
    Ok(TestReport::new("distance_covariance_permutation", observed, p, Some(n_perm)).with_seed(seed))
}
