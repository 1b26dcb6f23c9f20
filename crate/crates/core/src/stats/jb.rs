use super::sample::TestReport;
use crate::error::{Error, Result};

/// Jarque-Bera normality test, `JB = n (S²/6 + (K - 3)²/24)` with the χ²(2)
/// tail `exp(-JB/2)`.
pub fn jarque_bera(xs: &[f64]) -> Result<TestReport> {
    let n = xs.len();
    if n < 20 {
        return Err(Error::domain(format!("Jarque-Bera needs n >= 20, got {n}")));
    }
    let nf = n as f64;
    let mean = xs.iter().sum::<f64>() / nf;
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for x in xs {
        let d = x - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= nf;
    m3 /= nf;
    m4 /= nf;
    if m2 <= 0.0 {
        return Err(Error::domain("Jarque-Bera is undefined for a constant sample"));
    }
    let skew = m3 / m2.powf(1.5);
    let kurt = m4 / (m2 * m2);
    let jb = nf * (skew * skew / 6.0 + (kurt - 3.0).powi(2) / 24.0);
    Ok(TestReport::new("jarque_bera", jb, (-jb / 2.0).exp(), None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, Domain};
    use rand::Rng;
    use rand_distr::StandardNormal;

    #[test]
    fn rademacher_sample_is_rejected() {
        let xs: Vec<f64> = (0..10_000).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let r = jarque_bera(&xs).unwrap();
        assert!((r.statistic - 10_000.0 * 4.0 / 24.0).abs() < 1e-8);
        assert!(r.p_value < 1e-10);
    }

    #[test]
    fn normal_samples_rarely_rejected() {
        let mut rejections = 0;
        for run in 0..100 {
            let mut rng = stream(run, Domain::Validation, 1);
            let xs: Vec<f64> = (0..10_000).map(|_| rng.sample(StandardNormal)).collect();
            let r = jarque_bera(&xs).unwrap().at_level(0.01);
            assert!(r.statistic >= 0.0);
            rejections += r.reject as usize;
        }
        // binomial(100, 0.01) 99.9% upper quantile is 5
        assert!(rejections <= 5, "{rejections}");
    }

    #[test]
    fn short_or_constant_input_is_rejected() {
        assert!(jarque_bera(&[1.0; 10]).is_err());
        assert!(jarque_bera(&[1.0; 30]).is_err());
    }
}
