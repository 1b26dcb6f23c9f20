//! Splits the SU(2) fundamental representation space into K and conj(K).

use isofield::conj_basis::{fundamental_column, split_invariant_subspace, SplitOptions, SubspaceBasis};

fn main() -> isofield::Result<()> {
    let h = SubspaceBasis::new(fundamental_column(0), vec!["a".into(), "c".into()], 4)?;
    let (k, report) = split_invariant_subspace(&h, &SplitOptions::default())?;
    println!("status {:?}, dim V = {}, dim K = {}", report.status, report.dim_v, k.dim());
    if let Some(z) = report.isotropic_vector {
        println!("isotropic vector z = ({:+.6}{:+.6}i, {:+.6}{:+.6}i)", z[0][0], z[0][1], z[1][0], z[1][1]);
    }
    println!("max |<k_i, conj k_j>| = {:.2e}", report.orthogonality.unwrap_or(f64::NAN));
    println!("invariance residual   = {:.2e}", report.invariance_residual.unwrap_or(f64::NAN));
    println!("certified: {}", report.certified());
    Ok(())
}
