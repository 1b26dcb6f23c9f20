//! Random Fourier series on the circle and their translations.

use isofield::field::{evaluate_torus, sample_torus_coefficients, AngularPowerSpectrum, CoefficientLaw};
use isofield::rng::{stream, Domain};
use isofield::rotation::rotate_torus_coeffs;

fn main() -> isofield::Result<()> {
    let k_max = 6;
    let spectrum = AngularPowerSpectrum::flat(k_max).without_monopole();
    let mut rng = stream(3, Domain::Realization, 0);
    let c = sample_torus_coefficients(&spectrum, CoefficientLaw::FixedModulusPhase, k_max, &mut rng)?;
    let shift = 0.75;
    let moved = rotate_torus_coeffs(&c, shift);
    println!("{:>8} {:>12} {:>12}", "theta", "T(theta)", "T'(theta+s)");
    for j in 0..8 {
        let theta = j as f64 * 0.8;
        println!("{theta:>8.2} {:>12.6} {:>12.6}", evaluate_torus(&c, theta)?, evaluate_torus(&moved, theta + shift)?);
    }
    for k in 1..=k_max as i64 {
        println!("|a_{k}| = {:.6}  |rotated a_{k}| = {:.6}", c.get(k).norm(), moved.get(k).norm());
    }
    Ok(())
}
