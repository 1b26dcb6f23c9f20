use super::permutation::permutation_p_value;
use super::sample::{euclidean, SampleMatrix, TestReport};
use crate::error::{Error, Result};

/// Energy statistic `nm/(n+m) (2 E|X-Y| - E|X-X'| - E|Y-Y'|)` with V-statistic
/// means, computed from the pooled distance matrix, its row sums and a
/// membership mask (`1.0` for the first sample, `0.0` for the second).
fn energy_from_pooled(dist: &[f64], row_sums: &[f64], in_x: &[f64], n: usize, m: usize) -> f64 {
    let total = n + m;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for i in 0..total {
        let row = &dist[i * total..(i + 1) * total];
        let to_x: f64 = row.iter().zip(in_x).map(|(d, w)| d * w).sum();
        let to_y = row_sums[i] - to_x;
        if in_x[i] == 1.0 {
            sxx += to_x;
            sxy += to_y;
        } else {
            syy += to_y;
        }
    }
    let (nf, mf) = (n as f64, m as f64);
    nf * mf / (nf + mf) * (2.0 * sxy / (nf * mf) - sxx / (nf * nf) - syy / (mf * mf))
}

/// Two-sample energy-distance test; permutation `b` relabels the pooled
/// sample using the stream `(seed, Permutation, b)`.
pub fn energy_two_sample(x: &SampleMatrix, y: &SampleMatrix, n_perm: usize, seed: u64) -> Result<TestReport> {
    if x.d() != y.d() {
        return Err(Error::domain(format!("dimensions differ: {} vs {}", x.d(), y.d())));
    }
    let (n, m) = (x.n(), y.n());
    let total = n + m;
    let pooled: Vec<&[f64]> = (0..n).map(|i| x.row(i)).chain((0..m).map(|i| y.row(i))).collect();
    let mut dist = vec![0.0; total * total];
    for i in 0..total {
        for j in (i + 1)..total {
            let d = euclidean(pooled[i], pooled[j]);
            dist[i * total + j] = d;
            dist[j * total + i] = d;
        }
    }
    let row_sums: Vec<f64> = dist.chunks(total).map(|r| r.iter().sum()).collect();
    let mask: Vec<f64> = (0..total).map(|i| if i < n { 1.0 } else { 0.0 }).collect();
    let observed = energy_from_pooled(&dist, &row_sums, &mask, n, m);
    let p = permutation_p_value(observed, total, n_perm, seed, |perm| {
        let mut relabeled = vec![0.0; total];
        for &k in &perm[..n] {
            relabeled[k] = 1.0;
        }
        energy_from_pooled(&dist, &row_sums, &relabeled, n, m)
    })?;
    Ok(TestReport::new("energy_two_sample", observed, p, Some(n_perm)).with_seed(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, Domain};
    use rand::Rng;
    use rand_distr::StandardNormal;

    fn gaussian(n: usize, d: usize, shift: f64, seed: u64) -> SampleMatrix {
        let mut rng = stream(seed, Domain::Validation, 0);
        SampleMatrix::new(n, d, (0..n * d).map(|_| shift + rng.sample::<f64, _>(StandardNormal)).collect()).unwrap()
    }

    fn direct_energy(x: &SampleMatrix, y: &SampleMatrix) -> f64 {
        let mean = |a: &SampleMatrix, b: &SampleMatrix| {
            let mut s = 0.0;
            for i in 0..a.n() {
                for j in 0..b.n() {
                    s += euclidean(a.row(i), b.row(j));
                }
            }
            s / (a.n() * b.n()) as f64
        };
        let (n, m) = (x.n() as f64, y.n() as f64);
        n * m / (n + m) * (2.0 * mean(x, y) - mean(x, x) - mean(y, y))
    }

    #[test]
    fn equal_multisets_give_zero() {
        let x = gaussian(30, 2, 0.0, 1);
        let mut rows: Vec<Vec<f64>> = (0..30).map(|i| x.row(i).to_vec()).collect();
        rows.reverse();
        let y = SampleMatrix::from_rows(&rows).unwrap();
        let r = energy_two_sample(&x, &y, 99, 0).unwrap();
        assert!(r.statistic.abs() < 1e-12);
        assert_eq!(r.p_value, 1.0);
    }

    #[test]
    fn statistic_matches_direct_means() {
        let x = gaussian(25, 3, 0.0, 2);
        let y = gaussian(40, 3, 0.3, 3);
        let r = energy_two_sample(&x, &y, 99, 0).unwrap();
        assert!((r.statistic - direct_energy(&x, &y)).abs() < 1e-12);
    }

    #[test]
    fn shifted_gaussians_are_separated() {
        let x = gaussian(500, 2, 0.0, 4);
        let y = gaussian(500, 2, 1.0, 5);
        let r = energy_two_sample(&x, &y, 1999, 6).unwrap();
        assert!(r.p_value < 0.001);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let x = gaussian(10, 2, 0.0, 1);
        let y = gaussian(10, 3, 0.0, 1);
        assert!(matches!(energy_two_sample(&x, &y, 99, 0), Err(Error::Domain(_))));
    }
}
