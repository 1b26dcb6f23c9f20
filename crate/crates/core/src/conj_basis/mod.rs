//! Conjugation-orthogonal splitting of `H + conj(H)` for SU(2).

pub mod bilinear;
pub mod haar;
pub mod split;

pub use bilinear::{isotropic_vector, symmetrize_bilinear, BilinearForm2};
pub use haar::{conjugate, degree_one_harmonics, fundamental_column, haar_inner_product, su_function, SuFunction};
pub use split::{
    build_conjugation_operator, split_invariant_subspace, ConjugationOperator, SplitOptions, SplitReport,
    SplitStatus, SubspaceBasis, DEFAULT_QUADRATURE_ORDER,
};
