//! Isotropic random fields on the circle, the sphere and SU(2).
//!
//! The crate synthesizes fields from spectral expansions with independent
//! random coefficients, rotates them exactly in coefficient space, and runs
//! the statistical experiments showing that on the sphere (a non-Abelian
//! action) independent coefficients only give an isotropic field when they
//! are Gaussian, while on the circle any phase-invariant law works.
//!
//! Runnable walkthroughs of each capability live in the crate's `examples/`.

pub mod cli;
pub mod conj_basis;
pub mod error;
pub mod field;
pub mod grid;
pub mod repr;
pub mod rng;
pub mod rotation;
pub mod stats;

pub use error::{Error, Result};
