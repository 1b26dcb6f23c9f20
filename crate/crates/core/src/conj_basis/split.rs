//! Splitting `V = H + conj(H)` into `K ⊕ conj(K)` with `K` irreducible and
//! `K ⊥ conj(K)`.
//!
//! Everything is computed in coefficients over the generating family
//! `F = (f_1..f_d, conj f_1..conj f_d)`, where `f_i` span `H`. Inner products
//! come from the SU(2) quadrature; the group acts by `(g·f)(U) = f(g⁻¹U)`.
//!
//! With an orthonormal basis `h_i` of `H`, an orthonormal basis `p_j` of the
//! complement of `H` in `V` and a unitary intertwiner `T`, the vectors
//! `e_{i,1} = h_i`, `e_{i,2} = Σ_j p_j T_ji` identify `V` with `H ⊗ C²` (index
//! `s·d + i`). Conjugation then reads `c ↦ (L ⊗ W) conj(c)`, where `W`
//! intertwines `conj ρ_H` with `ρ_H`; `K = H ⊗ span{z}` with `zᵀ conj(L) z = 0`.

use nalgebra::{DMatrix, DVector, Vector2};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::bilinear::{isotropic_vector, symmetrize_bilinear, BilinearForm2};
use super::haar::{conjugate, SuFunction};
use crate::error::{Error, Result};
use crate::grid::Su2Grid;
use crate::repr::{su2_matrix, EulerRotation, Su2};
use crate::rng::{stream, Domain};

type CMat = DMatrix<Complex64>;

const RANK_TOLERANCE: f64 = 1e-8;
const INTERTWINER_TOLERANCE: f64 = 1e-6;

/// Quadrature order exact for products of fundamental-representation entries
/// and of the degree-one harmonics (polynomials of degree 2 in `U`).
pub const DEFAULT_QUADRATURE_ORDER: usize = 4;

/// Functions spanning a subspace of `L²(SU(2))`, with their Gram matrix
/// `G_ij = ⟨f_j, f_i⟩`.
#[derive(Clone)]
pub struct SubspaceBasis {
    functions: Vec<SuFunction>,
    labels: Vec<String>,
    gram: CMat,
}

impl std::fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubspaceBasis").field("labels", &self.labels).field("gram", &self.gram).finish()
    }
}

impl SubspaceBasis {
    /// Fails with [`Error::Structural`] if the functions are numerically
    /// linearly dependent.
    pub fn new(functions: Vec<SuFunction>, labels: Vec<String>, quadrature_order: usize) -> Result<Self> {
        if functions.is_empty() || functions.len() != labels.len() {
            return Err(Error::domain("need a nonempty list of functions with one label each"));
        }
        let grid = Su2Grid::new(quadrature_order)?;
        let values = evaluate(&functions, &grid, None);
        let gram = gram_matrix(&values, &values, &grid);
        let min_eig = gram.clone().symmetric_eigenvalues().min();
        if min_eig <= RANK_TOLERANCE * gram.norm() {
            return Err(Error::Structural(format!(
                "basis functions are linearly dependent (smallest Gram eigenvalue {min_eig:e})"
            )));
        }
        Ok(Self { functions, labels, gram })
    }

    pub fn dim(&self) -> usize {
        self.functions.len()
    }

    pub fn functions(&self) -> &[SuFunction] {
        &self.functions
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &CMat {
        &self.gram
    }
}

/// Function values, `rows = nodes`, `cols = functions`, optionally at the
/// translated nodes `g⁻¹U`.
fn evaluate(functions: &[SuFunction], grid: &Su2Grid, g_inv: Option<&Su2>) -> CMat {
    let nodes = grid.nodes();
    CMat::from_fn(nodes.len(), functions.len(), |r, c| {
        let u = match g_inv {
            Some(h) => h.mul(&nodes[r].matrix),
            None => nodes[r].matrix,
        };
        functions[c](&u)
    })
}

/// `G_ij = Σ_n w_n conj(A_ni) B_nj`, i.e. `⟨b_j, a_i⟩`.
fn gram_matrix(a: &CMat, b: &CMat, grid: &Su2Grid) -> CMat {
    let w = DVector::from_iterator(grid.nodes().len(), grid.nodes().iter().map(|n| Complex64::new(n.weight, 0.0)));
    let wb = CMat::from_fn(b.nrows(), b.ncols(), |r, c| w[r] * b[(r, c)]);
    a.adjoint() * wb
}

fn hermitian_power(m: &CMat, power: f64) -> Result<CMat> {
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = h.symmetric_eigen();
    if eig.eigenvalues.iter().any(|v| *v <= 0.0) {
        return Err(Error::numeric("Gram matrix is not positive definite"));
    }
    let d = CMat::from_diagonal(&eig.eigenvalues.map(|v| Complex64::new(v.powf(power), 0.0)));
    Ok(&eig.eigenvectors * d * eig.eigenvectors.adjoint())
}

fn numerical_rank(gram: &CMat) -> usize {
    let h = (gram + gram.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = h.symmetric_eigenvalues();
    let top = eig.max().max(0.0);
    eig.iter().filter(|v| **v > RANK_TOLERANCE * top).count()
}

/// Null space of the stacked linear system, as unit vectors.
fn null_space(system: &CMat) -> (Vec<DVector<Complex64>>, Vec<f64>) {
    let svd = system.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let mut sv: Vec<(usize, f64)> = svd.singular_values.iter().copied().enumerate().collect();
    sv.sort_by(|a, b| b.1.total_cmp(&a.1));
    let top = sv.first().map_or(0.0, |s| s.1);
    let null = sv
        .iter()
        .filter(|(_, s)| *s <= INTERTWINER_TOLERANCE * top)
        .map(|(i, _)| v_t.row(*i).adjoint())
        .collect();
    (null, sv.into_iter().map(|s| s.1).collect())
}

/// Solves `target(g) X = X source(g)` for all sampled `g` and returns `X`
/// scaled to `‖X‖_F² = d`. Fails with [`Error::Structural`] when no nonzero
/// solution exists (the representations are inequivalent).
pub(crate) fn intertwiner(target: &[CMat], source: &[CMat]) -> Result<(CMat, Vec<f64>)> {
    let d = source[0].nrows();
    let id = CMat::identity(d, d);
    let mut system = CMat::zeros(target.len() * d * d, d * d);
    for (k, (t, s)) in target.iter().zip(source).enumerate() {
        // vec(T X - X S) = (I ⊗ T - Sᵀ ⊗ I) vec(X)
        let block = id.kronecker(t) - s.transpose().kronecker(&id);
        system.view_mut((k * d * d, 0), (d * d, d * d)).copy_from(&block);
    }
    let (null, singular_values) = null_space(&system);
    let Some(v) = null.into_iter().next() else {
        return Err(Error::Structural(format!(
            "no intertwiner: H and conj(H) are inequivalent, so conj(H) ⊥ H already (smallest singular value {:e})",
            singular_values.last().copied().unwrap_or(0.0)
        )));
    };
    let x = CMat::from_column_slice(d, d, v.as_slice());
    let scale = (d as f64).sqrt() / x.norm();
    Ok((x * Complex64::new(scale, 0.0), singular_values))
}

/// Outcome of [`build_conjugation_operator`].
#[derive(Debug, Clone)]
pub struct ConjugationOperator {
    /// Multiplicity part of conjugation on `H ⊗ C²`.
    pub l: nalgebra::Matrix2<Complex64>,
    /// `ρ_H W = W conj(ρ_H)`, normalized to `‖W‖_F² = d`.
    pub w: CMat,
    /// Unitary intertwiner from `ρ_H` to the representation on the complement.
    pub t: CMat,
    /// `‖Σ - L ⊗ W‖_max` for the conjugation matrix `Σ` in the `e` basis.
    pub factorization_residual: f64,
    /// Largest `L²` error of the model on random elements of `V`.
    pub reconstruction_residual: f64,
    pub intertwiner_singular_values: Vec<f64>,
    frame: Frame,
}

/// Data shared by the operator construction and the split.
#[derive(Debug, Clone)]
struct Frame {
    d: usize,
    grid_order: usize,
    /// Values of the family `F` at the quadrature nodes.
    values: CMat,
    gram_f: CMat,
    /// `e` basis in family coefficients (`2d × 2d`, column `s·d + i`).
    e: CMat,
    /// Coefficients of `h_i` (first `d` columns of `e`).
    sample_seed: u64,
}

/// Options of the split algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitOptions {
    pub quadrature_order: usize,
    /// Group elements used to pin down intertwiners.
    pub n_group_samples: usize,
    pub seed: u64,
}

impl Default for SplitOptions {
    fn default() -> Self {
        Self { quadrature_order: DEFAULT_QUADRATURE_ORDER, n_group_samples: 8, seed: 0 }
    }
}

fn family(h: &SubspaceBasis) -> Vec<SuFunction> {
    let mut f: Vec<SuFunction> = h.functions.to_vec();
    f.extend(h.functions.iter().map(conjugate));
    f
}

/// `P conj(c)`: family coefficients of the conjugate of the function with
/// family coefficients `c`.
fn conj_coeffs(c: &CMat, d: usize) -> CMat {
    let mut out = c.map(|z| z.conj());
    for col in 0..c.ncols() {
        for i in 0..d {
            out.swap((i, col), (i + d, col));
        }
    }
    out
}

fn sample_group(opts: &SplitOptions, k: u64) -> Su2 {
    su2_matrix(&EulerRotation::haar_random(&mut stream(opts.seed, Domain::Intertwiner, k), true))
}

/// Matrices `⟨g·b_j, a_i⟩` for coefficient blocks `a`, `b` over the family.
fn action(frame: &Frame, grid: &Su2Grid, functions: &[SuFunction], g: &Su2, a: &CMat, b: &CMat) -> CMat {
    let moved = evaluate(functions, grid, Some(&g.inverse()));
    let x = gram_matrix(&frame.values, &moved, grid);
    a.adjoint() * x * b
}

/// Whether `H` is self-conjugate, and the Gram matrix of the family.
fn conjugation_rank(h: &SubspaceBasis, grid: &Su2Grid) -> (usize, CMat, CMat, Vec<SuFunction>) {
    let fam = family(h);
    let values = evaluate(&fam, grid, None);
    let gram = gram_matrix(&values, &values, grid);
    (numerical_rank(&gram), gram, values, fam)
}

/// Identifies `V = H + conj(H)` with `H ⊗ C²` and expresses complex
/// conjugation there as `c ↦ (L ⊗ W) conj(c)`.
///
/// Errors: [`Error::Structural`] if `H` is self-conjugate (no multiplicity
/// space), if `H` is not invariant, or if `conj(H)` is inequivalent to `H`;
/// [`Error::Numeric`] if the factorization `Σ = L ⊗ W` fails.
pub fn build_conjugation_operator(h: &SubspaceBasis, opts: &SplitOptions) -> Result<ConjugationOperator> {
    let grid = Su2Grid::new(opts.quadrature_order)?;
    let d = h.dim();
    let (rank, gram_f, values, fam) = conjugation_rank(h, &grid);
    if rank == d {
        return Err(Error::Structural("H = conj(H): nothing to split".into()));
    }
    if rank != 2 * d {
        return Err(Error::Structural(format!(
            "dim(H + conj H) = {rank} is neither {d} nor {}; H is not irreducible",
            2 * d
        )));
    }
    let id = CMat::identity(d, d);
    let mut x_h = CMat::zeros(2 * d, d);
    x_h.view_mut((0, 0), (d, d)).copy_from(&id);
    let g_h = x_h.adjoint() * &gram_f * &x_h;
    let c_h = &x_h * hermitian_power(&g_h, -0.5)?;
    let mut x_p = CMat::zeros(2 * d, d);
    x_p.view_mut((d, 0), (d, d)).copy_from(&id);
    let r = &x_p - &c_h * (c_h.adjoint() * &gram_f * &x_p);
    let c_p = &r * hermitian_power(&(r.adjoint() * &gram_f * &r), -0.5)?;

    let mut frame = Frame {
        d,
        grid_order: opts.quadrature_order,
        values,
        gram_f: gram_f.clone(),
        e: CMat::zeros(2 * d, 2 * d),
        sample_seed: opts.seed,
    };

    let mut rho_h = Vec::new();
    let mut rho_p = Vec::new();
    let mut leak: f64 = 0.0;
    for k in 0..opts.n_group_samples as u64 {
        let g = sample_group(opts, k);
        rho_h.push(action(&frame, &grid, &fam, &g, &c_h, &c_h));
        rho_p.push(action(&frame, &grid, &fam, &g, &c_p, &c_p));
        leak = leak.max(action(&frame, &grid, &fam, &g, &c_p, &c_h).camax());
    }
    if leak > 1e-8 {
        return Err(Error::Structural(format!("H is not invariant (leakage {leak:e})")));
    }
    let (t, singular_values) = intertwiner(&rho_p, &rho_h)?;
    let conj_rho: Vec<CMat> = rho_h.iter().map(|m| m.map(|z| z.conj())).collect();
    let (w, _) = intertwiner(&rho_h, &conj_rho)?;

    let mut e = CMat::zeros(2 * d, 2 * d);
    e.view_mut((0, 0), (2 * d, d)).copy_from(&c_h);
    e.view_mut((0, d), (2 * d, d)).copy_from(&(&c_p * &t));
    frame.e = e.clone();

    // Σ_{(is),(jt)} = ⟨conj e_jt, e_is⟩
    let sigma = e.adjoint() * &gram_f * conj_coeffs(&e, d);
    let w_norm2 = w.norm_squared();
    let mut l = nalgebra::Matrix2::zeros();
    let mut factorization_residual: f64 = 0.0;
    for s in 0..2 {
        for tt in 0..2 {
            let block = sigma.view((s * d, tt * d), (d, d)).clone_owned();
            let lst = (w.adjoint() * &block).trace() / w_norm2;
            l[(s, tt)] = lst;
            factorization_residual = factorization_residual.max((block - &w * lst).camax());
        }
    }
    if factorization_residual > 1e-8 {
        return Err(Error::numeric(format!("conjugation does not factor as L ⊗ W (residual {factorization_residual:e})")));
    }

    let model = l.kronecker(&w);
    let reconstruction_residual = reconstruction_check(&frame, &grid, &model, opts);
    Ok(ConjugationOperator {
        l,
        w,
        t,
        factorization_residual,
        reconstruction_residual,
        intertwiner_singular_values: singular_values,
        frame,
    })
}

/// Pointwise comparison of `conj(f)` with the model for 20 random unit `f`.
fn reconstruction_check(frame: &Frame, grid: &Su2Grid, model: &CMat, opts: &SplitOptions) -> f64 {
    use rand::Rng;
    let d2 = 2 * frame.d;
    let mut rng = stream(opts.seed, Domain::Validation, 1);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let mut c = DVector::from_fn(d2, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        c /= Complex64::new(c.norm(), 0.0);
        let f_vals = &frame.values * (&frame.e * &c);
        let model_vals = &frame.values * (&frame.e * (model * c.map(|z| z.conj())));
        let err: f64 = grid
            .nodes()
            .iter()
            .zip(f_vals.iter().zip(model_vals.iter()))
            .map(|(n, (f, m))| n.weight * (f.conj() - m).norm_sqr())
            .sum();
        worst = worst.max(err.sqrt());
    }
    worst
}

/// Serializable complex matrix, `[re, im]` entries row by row.
pub type ComplexRows = Vec<Vec<[f64; 2]>>;

fn rows_of<R: nalgebra::Dim, C: nalgebra::Dim, S: nalgebra::RawStorage<Complex64, R, C>>(
    m: &nalgebra::Matrix<Complex64, R, C, S>,
) -> ComplexRows {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitStatus {
    /// `H = conj(H)`; no split is needed.
    SelfConjugate,
    /// `K ⊥ conj(K)` was constructed.
    Split,
}

/// Certificates and intermediate matrices of a split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitReport {
    pub status: SplitStatus,
    pub labels: Vec<String>,
    pub dim_h: usize,
    pub quadrature_order: usize,
    pub gram_h: ComplexRows,
    pub dim_v: usize,
    pub l_matrix: Option<ComplexRows>,
    pub w_matrix: Option<ComplexRows>,
    pub b_sym: Option<ComplexRows>,
    pub isotropic_vector: Option<[[f64; 2]; 2]>,
    /// `|zᵀ B_sym z|`.
    pub isotropic_residual: Option<f64>,
    /// `max |⟨k_i, conj k_j⟩|`.
    pub orthogonality: Option<f64>,
    pub rank_k: Option<usize>,
    pub rank_k_plus_conj_k: Option<usize>,
    /// Largest norm of the part of `g·k_i` outside `K`, over 10 random `g`.
    pub invariance_residual: Option<f64>,
    pub factorization_residual: Option<f64>,
    pub reconstruction_residual: Option<f64>,
    pub intertwiner_singular_values: Option<Vec<f64>>,
}

impl SplitReport {
    /// Whether every certificate meets its tolerance.
    pub fn certified(&self) -> bool {
        match self.status {
            SplitStatus::SelfConjugate => true,
            SplitStatus::Split => {
                self.orthogonality.is_some_and(|v| v < 1e-10)
                    && self.isotropic_residual.is_some_and(|v| v < 1e-12)
                    && self.invariance_residual.is_some_and(|v| v < 1e-8)
                    && self.reconstruction_residual.is_some_and(|v| v < 1e-10)
                    && self.rank_k == Some(self.dim_h)
                    && self.rank_k_plus_conj_k == Some(self.dim_v)
            }
        }
    }
}

/// Returns a basis of an irreducible invariant `K ⊆ H + conj(H)` with
/// `K ⊥ conj(K)` and the certificates, or `K = H` with status
/// [`SplitStatus::SelfConjugate`] when `H = conj(H)`.
pub fn split_invariant_subspace(h: &SubspaceBasis, opts: &SplitOptions) -> Result<(SubspaceBasis, SplitReport)> {
    let grid = Su2Grid::new(opts.quadrature_order)?;
    let d = h.dim();
    let (rank, _, _, _) = conjugation_rank(h, &grid);
    let mut report = SplitReport {
        status: SplitStatus::SelfConjugate,
        labels: h.labels.clone(),
        dim_h: d,
        quadrature_order: opts.quadrature_order,
        gram_h: rows_of(&h.gram),
        dim_v: rank,
        l_matrix: None,
        w_matrix: None,
        b_sym: None,
        isotropic_vector: None,
        isotropic_residual: None,
        orthogonality: None,
        rank_k: None,
        rank_k_plus_conj_k: None,
        invariance_residual: None,
        factorization_residual: None,
        reconstruction_residual: None,
        intertwiner_singular_values: None,
    };
    if rank == d {
        return Ok((h.clone(), report));
    }

    let op = build_conjugation_operator(h, opts)?;
    let frame = &op.frame;
    let b = BilinearForm2(op.l.map(|z| z.conj()));
    let b_sym = symmetrize_bilinear(&b);
    let z: Vector2<Complex64> = isotropic_vector(&b_sym);

    // k_i = Σ_s z_s e_{i,s}
    let mut k = CMat::zeros(2 * d, d);
    for i in 0..d {
        for s in 0..2 {
            let col = frame.e.column(s * d + i) * z[s];
            let mut target = k.column_mut(i);
            target += col;
        }
    }
    let conj_k = conj_coeffs(&k, d);
    let cross = conj_k.adjoint() * &frame.gram_f * &k;
    let gram_k = k.adjoint() * &frame.gram_f * &k;
    let mut both = CMat::zeros(2 * d, 2 * d);
    both.view_mut((0, 0), (2 * d, d)).copy_from(&k);
    both.view_mut((0, d), (2 * d, d)).copy_from(&conj_k);
    let gram_both = both.adjoint() * &frame.gram_f * &both;

    let fam = family(h);
    let k_orth = &k * hermitian_power(&gram_k, -0.5)?;
    let mut invariance: f64 = 0.0;
    for idx in 0..10u64 {
        let g = sample_group(&SplitOptions { seed: frame.sample_seed.wrapping_add(1), ..*opts }, idx);
        let moved = evaluate(&fam, &grid, Some(&g.inverse()));
        let overlap = gram_matrix(&frame.values, &moved, &grid);
        // values of g·k_i and of its orthogonal projection onto K
        let moved_k = &moved * &k_orth;
        let projected = &frame.values * &k_orth * (k_orth.adjoint() * &overlap * &k_orth);
        for i in 0..d {
            let err: f64 = grid
                .nodes()
                .iter()
                .zip(moved_k.column(i).iter().zip(projected.column(i).iter()))
                .map(|(n, (a, b))| n.weight * (a - b).norm_sqr())
                .sum();
            invariance = invariance.max(err.sqrt());
        }
    }

    report.status = SplitStatus::Split;
    report.l_matrix = Some(rows_of(&op.l));
    report.w_matrix = Some(rows_of(&op.w));
    report.b_sym = Some(rows_of(&b_sym.0));
    report.isotropic_vector = Some([[z[0].re, z[0].im], [z[1].re, z[1].im]]);
    report.isotropic_residual = Some(b_sym.quadratic(&z).norm());
    report.orthogonality = Some(cross.camax());
    report.rank_k = Some(numerical_rank(&gram_k));
    report.rank_k_plus_conj_k = Some(numerical_rank(&gram_both));
    report.invariance_residual = Some(invariance);
    report.factorization_residual = Some(op.factorization_residual);
    report.reconstruction_residual = Some(op.reconstruction_residual);
    report.intertwiner_singular_values = Some(op.intertwiner_singular_values.clone());

    let functions: Vec<SuFunction> = (0..d)
        .map(|i| {
            let coeffs: Vec<Complex64> = k.column(i).iter().copied().collect();
            let fam = fam.clone();
            super::haar::su_function(move |u: &Su2| fam.iter().zip(&coeffs).map(|(f, c)| c * f(u)).sum())
        })
        .collect();
    let labels = (0..d).map(|i| format!("k{}", i + 1)).collect();
    let k_basis = SubspaceBasis::new(functions, labels, frame.grid_order)?;
    Ok((k_basis, report))
}
