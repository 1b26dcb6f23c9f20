//! Rotating coefficients by the representation matrices moves the field.

use std::f64::consts::PI;

use isofield::field::{sample_coefficients, AngularPowerSpectrum, CoefficientLaw};
use isofield::grid::evaluate_real;
use isofield::repr::EulerRotation;
use isofield::rng::{stream, Domain};
use isofield::rotation::{rotate_coeffs, rotate_point, SpherePoint};

fn main() -> isofield::Result<()> {
    let l_max = 8;
    let mut rng = stream(1, Domain::Realization, 0);
    let a = sample_coefficients(&AngularPowerSpectrum::flat(l_max), CoefficientLaw::UniformDisk, l_max, &mut rng)?;
    let g = EulerRotation::new(0.3, 1.2, 2.0)?;
    let rotated = rotate_coeffs(&a, &g)?;

    let mut worst: f64 = 0.0;
    for i in 0..6 {
        let x = SpherePoint::new(0.2 + 0.5 * i as f64, 0.9 * i as f64 % (2.0 * PI))?;
        let y = rotate_point(&g, &x);
        let lhs = evaluate_real(&rotated, x.colatitude, x.longitude)?;
        let rhs = evaluate_real(&a, y.colatitude, y.longitude)?;
        worst = worst.max((lhs - rhs).abs());
        println!("x = ({:.2}, {:.2})  rotated field {lhs:+.10}  original at g^-1 x {rhs:+.10}", x.colatitude, x.longitude);
    }
    println!("max difference {worst:.2e}");
    Ok(())
}
