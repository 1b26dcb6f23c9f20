use super::sample::TestReport;
use crate::error::{Error, Result};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic Kolmogorov p-value
/// (including the usual small-sample correction of the effective size).
pub fn ks_two_sample(xs: &[f64], ys: &[f64]) -> Result<TestReport> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::domain("Kolmogorov-Smirnov needs two nonempty samples"));
    }
    let mut a = xs.to_vec();
    let mut b = ys.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (n, m) = (a.len(), b.len());
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        let v = a[i].min(b[j]);
        while i < n && a[i] <= v {
            i += 1;
        }
        while j < m && b[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let en = ((n * m) as f64 / (n + m) as f64).sqrt();
    let p = kolmogorov_survival((en + 0.12 + 0.11 / en) * d);
    Ok(TestReport::new("ks_two_sample", d, p, None))
}

/// `P(K > λ) = 2 Σ_{j>=1} (-1)^{j-1} exp(-2 j² λ²)`.
fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for j in 1..=100 {
        let jf = j as f64;
        let term = (-2.0 * jf * jf * lambda * lambda).exp();
        sum += if j % 2 == 1 { term } else { -term };
        if term < 1e-300 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}
