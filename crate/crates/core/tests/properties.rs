use std::f64::consts::PI;

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;
use proptest::prelude::*;

use isofield::conj_basis::{isotropic_vector, BilinearForm2};
use isofield::field::{
    evaluate_torus, sample_coefficients, sample_torus_coefficients, AngularPowerSpectrum, CoefficientLaw,
};
use isofield::grid::{analyze, build_grid, synthesize};
use isofield::repr::{rep_matrix_phi_basis, wigner_d, EulerRotation};
use isofield::rng::{stream, Domain};
use isofield::rotation::{rotate_coeffs, rotate_torus_coeffs};
use isofield::stats::{distance_covariance, SampleMatrix};

fn euler() -> impl Strategy<Value = EulerRotation> {
    (0.0..2.0 * PI, 0.0..=PI, 0.0..2.0 * PI).prop_map(|(a, b, g)| EulerRotation::new(a, b, g).unwrap())
}

fn law() -> impl Strategy<Value = CoefficientLaw> {
    prop::sample::select(CoefficientLaw::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rep_matrices_are_unitary(g in euler(), l in 0usize..12) {
        prop_assert!(wigner_d(l, &g).unitarity_defect() < 1e-12);
        prop_assert!(rep_matrix_phi_basis(l, &g).unitarity_defect() < 1e-12);
    }

    #[test]
    fn compose_with_inverse_is_identity(g in euler()) {
        let m = g.compose(&g.inverse()).matrix();
        prop_assert!((m - nalgebra::Matrix3::identity()).amax() < 1e-12);
    }

    #[test]
    fn rotation_keeps_reality_and_block_power(g in euler(), l_max in 0usize..9, law in law(), seed in any::<u64>()) {
        let mut rng = stream(seed, Domain::Validation, 0);
        let a = sample_coefficients(&AngularPowerSpectrum::flat(l_max), law, l_max, &mut rng).unwrap();
        let b = rotate_coeffs(&a, &g).unwrap();
        prop_assert!(b.reality_violation() == 0.0);
        for (pa, pb) in a.block_power().iter().zip(b.block_power()) {
            prop_assert!((pa - pb).abs() < 1e-11 * pa.max(1.0));
        }
    }

    #[test]
    fn synthesis_then_analysis_recovers(l_max in 0usize..12, law in law(), seed in any::<u64>()) {
        let mut rng = stream(seed, Domain::Validation, 1);
        let a = sample_coefficients(&AngularPowerSpectrum::flat(l_max), law, l_max, &mut rng).unwrap();
        let grid = build_grid(l_max);
        let back = analyze(&synthesize(&a, &grid).unwrap(), l_max).unwrap();
        prop_assert!(back.max_abs_diff(&a) < 1e-11);
    }

    #[test]
    fn torus_shift_translates_the_field(shift in -10.0f64..10.0, theta in 0.0..2.0 * PI, law in law(), seed in any::<u64>()) {
        let mut rng = stream(seed, Domain::Validation, 2);
        let c = sample_torus_coefficients(&AngularPowerSpectrum::flat(5), law, 5, &mut rng).unwrap();
        let moved = rotate_torus_coeffs(&c, shift);
        let lhs = evaluate_torus(&moved, theta).unwrap();
        let rhs = evaluate_torus(&c, theta - shift).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-11);
    }

    #[test]
    fn isotropic_vector_is_null_and_normalized(entries in prop::array::uniform6(-3.0f64..3.0)) {
        let off = Complex64::new(entries[2], entries[3]);
        let b = BilinearForm2(Matrix2::new(
            Complex64::new(entries[0], entries[1]), off,
            off, Complex64::new(entries[4], entries[5]),
        ));
        let z: Vector2<Complex64> = isotropic_vector(&b);
        prop_assert!((z.norm() - 1.0).abs() < 1e-12);
        prop_assert!(b.quadratic(&z).norm() < 1e-10 * (1.0 + b.0.camax()));
    }

    #[test]
    fn dcov_is_nonnegative_and_symmetric(xs in prop::collection::vec(-5.0f64..5.0, 4..40), shift in -1.0f64..1.0) {
        let ys: Vec<f64> = xs.iter().map(|x| (x + shift).sin()).collect();
        let x = SampleMatrix::column(&xs).unwrap();
        let y = SampleMatrix::column(&ys).unwrap();
        let xy = distance_covariance(&x, &y).unwrap();
        let yx = distance_covariance(&y, &x).unwrap();
        prop_assert!(xy >= -1e-12);
        prop_assert!((xy - yx).abs() < 1e-12);
    }
}
