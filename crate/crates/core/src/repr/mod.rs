//! Numerical representation theory for the circle, the sphere and SU(2).

pub mod assumption;
pub mod euler;
pub mod harmonic;
pub mod legendre;
pub mod su2;
pub mod wigner;

pub use assumption::{check_assumption, search_witness, zero_set_probe, AssumptionReport};
pub use euler::EulerRotation;
pub use harmonic::{conj_compatible_phi, spherical_harmonic, torus_character, PhiTable, SphericalIndex};
pub use legendre::assoc_legendre;
pub use su2::{su2_matrix, Su2};
pub use wigner::{rep_matrix_phi_basis, wigner_d, wigner_small_d, RepMatrix};
