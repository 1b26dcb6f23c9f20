//! Samples an isotropic field on the sphere and checks it against the
//! covariance kernel.
//!
//! ```text
//! cargo run --release --example simulate_field
//! ```

use isofield::field::{field_energy, sample_coefficients, AngularPowerSpectrum, CoefficientLaw};
use isofield::grid::{build_grid, covariance_kernel, evaluate_real, synthesize};
use isofield::rng::{stream, Domain};
use isofield::rotation::SpherePoint;

fn main() -> isofield::Result<()> {
    let l_max = 12;
    let spectrum = AngularPowerSpectrum::power_law(1.0, 2.0, l_max)?.without_monopole();

    let mut rng = stream(42, Domain::Realization, 0);
    let coeffs = sample_coefficients(&spectrum, CoefficientLaw::ComplexGaussian, l_max, &mut rng)?;
    let grid = build_grid(l_max);
    let values = synthesize(&coeffs, &grid)?;
    let power: f64 = coeffs.block_power().iter().sum();
    println!("grid {}x{} ({} nodes)", grid.n_theta(), grid.n_phi(), grid.len());
    println!("sum |a|^2 = {power:.12}, quadrature energy = {:.12}", field_energy(&values)?);

    // empirical E[T(x)T(y)] over many realizations
    let x = SpherePoint::new(0.4, 1.0)?;
    let y = SpherePoint::new(1.1, 2.5)?;
    let n = 20_000;
    let (mut acc, mut acc2) = (0.0, 0.0);
    for r in 0..n {
        let mut rng = stream(42, Domain::Realization, r + 1);
        let c = sample_coefficients(&spectrum, CoefficientLaw::ComplexGaussian, l_max, &mut rng)?;
        let p = evaluate_real(&c, x.colatitude, x.longitude)? * evaluate_real(&c, y.colatitude, y.longitude)?;
        acc += p;
        acc2 += p * p;
    }
    let mean = acc / n as f64;
    let se = ((acc2 / n as f64 - mean * mean) / n as f64).sqrt();
    println!(
        "E[T(x)T(y)]: empirical {mean:.4} +/- {se:.4}, kernel {:.4} (n = {n})",
        covariance_kernel(&spectrum, x.cos_angle(&y))?
    );
    Ok(())
}
