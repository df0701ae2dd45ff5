//! Lusztig's algorithm: the matrix Ω, its unique block factorization
//! `ᵗPΛP = Ω`, the characteristic functions `X` on split unipotent classes,
//! and cell-by-cell comparison with a target table.

mod bundle;
pub mod schema;

pub use bundle::{
    load_case, parse_case, CaseBundle, ColumnClass, Defect, Expected, Target, TargetStatus, TwistedWeyl,
};

use thiserror::Error;

use crate::cosetdata::{
    blocks_of, build_y_table, coset_orthogonality_check, derive_sizes_from_columns, DataError, OrthogonalityReport,
};
use crate::exactfield::{FieldError, MatrixRF, Poly, QuadRational, RatFunc};
use crate::weylgroups::WeylError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgorithmError {
    #[error("{matrix}[{row}][{col}] is not a polynomial: {value}")]
    NonPolynomial { matrix: String, row: usize, col: usize, value: String },
    #[error("Λ block {block} is singular; the algorithm does not apply to this data")]
    SingularBlock { block: usize },
    #[error("Ω is not symmetric")]
    NotSymmetric,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Data(#[from] DataError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("JSON error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid {field}: {message}")]
    Invalid { field: String, message: String },
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Algorithm(#[from] AlgorithmError),
}

fn lcm(a: &Poly, b: &Poly) -> Result<Poly, FieldError> {
    let g = a.gcd(b)?;
    Ok(a.checked_mul(b)?.divmod(&g)?.0.monic())
}

/// `Ω_ij = (|G|/|W|)·Σ_c size_c·ρ̃_i(c)·ρ̃_j(c) / (T_c·q^{d_i+d_j})`, summed over F-classes.
///
/// Every entry must reduce to a polynomial.
pub fn omega_from_parts(
    group_order: &Poly,
    weyl_order: usize,
    sizes: &[usize],
    torus: &[Poly],
    values: &[Vec<QuadRational>],
    d_u: &[u32],
) -> Result<MatrixRF, AlgorithmError> {
    let d = group_order.d();
    let n = values.len();
    if sizes.len() != torus.len() || values.iter().any(|r| r.len() != torus.len()) || d_u.len() != n {
        return Err(AlgorithmError::Shape("sizes, torus orders, values and d_u disagree".into()));
    }
    let common = torus.iter().try_fold(Poly::one(d), |acc, t| lcm(&acc, t))?;
    let cofactors: Vec<Poly> =
        torus.iter().map(|t| common.divmod(t).map(|(quo, _)| quo)).collect::<Result<_, _>>()?;
    let base_den = common.scale(&QuadRational::from_integer(weyl_order as i64, d));
    let mut omega = MatrixRF::zeros(n, n, d);
    for i in 0..n {
        for j in i..n {
            let mut sum = Poly::zero(d);
            for c in 0..torus.len() {
                let coeff = &(&values[i][c] * &values[j][c]) * &QuadRational::from_integer(sizes[c] as i64, d);
                if !coeff.is_zero() {
                    sum = sum.checked_add(&cofactors[c].scale(&coeff))?;
                }
            }
            let num = group_order.checked_mul(&sum)?;
            let den = base_den.shift((d_u[i] + d_u[j]) as usize);
            let entry = RatFunc::new(num, den)?;
            if entry.is_polynomial().is_none() {
                return Err(AlgorithmError::NonPolynomial {
                    matrix: "omega".into(),
                    row: i,
                    col: j,
                    value: entry.to_string(),
                });
            }
            omega.set(i, j, entry.clone());
            omega.set(j, i, entry);
        }
    }
    Ok(omega)
}

pub fn build_omega(bundle: &CaseBundle) -> Result<MatrixRF, AlgorithmError> {
    omega_from_parts(
        &bundle.group_order,
        bundle.weyl.order(),
        &bundle.weyl.sizes(),
        &bundle.coset_chars.column_torus_orders,
        &bundle.coset_chars.values,
        &bundle.d_values(),
    )
}

/// Groups indices into maximal runs of equal block id.
fn block_runs(block_ids: &[usize]) -> Vec<Vec<usize>> {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for (i, b) in block_ids.iter().enumerate() {
        match runs.last_mut() {
            Some(r) if block_ids[r[0]] == *b => r.push(i),
            _ => runs.push(vec![i]),
        }
    }
    runs
}

/// Unique `(P, Λ)` with `ᵗPΛP = Ω`, `P` block unitriangular, `Λ` block diagonal.
///
/// Block forward elimination:
/// `Λ_I = Ω_II − Σ_{K<I} ᵗP_KI·Λ_K·P_KI`,
/// `P_IJ = Λ_I⁻¹·(Ω_IJ − Σ_{K<I} ᵗP_KI·Λ_K·P_KJ)` for `J > I`.
pub fn solve_block_factorization(omega: &MatrixRF, block_ids: &[usize]) -> Result<(MatrixRF, MatrixRF), AlgorithmError> {
    let n = omega.rows();
    if !omega.is_square() || block_ids.len() != n {
        return Err(AlgorithmError::Shape(format!("{}x{} against {} block ids", omega.rows(), omega.cols(), n)));
    }
    if !omega.is_symmetric() {
        return Err(AlgorithmError::NotSymmetric);
    }
    let d = omega.d();
    let blocks = block_runs(block_ids);
    let mut p = MatrixRF::identity(n, d);
    let mut lambda = MatrixRF::zeros(n, n, d);
    // ᵗP_KI·Λ_K for all K < I, reused across J
    for (bi, ib) in blocks.iter().enumerate() {
        let earlier = &blocks[..bi];
        let left: Vec<MatrixRF> = earlier
            .iter()
            .map(|kb| p.submatrix(kb, ib).transpose().checked_mul(&lambda.submatrix(kb, kb)))
            .collect::<Result<_, _>>()?;
        let schur = |jb: &[usize]| -> Result<MatrixRF, AlgorithmError> {
            let mut m = omega.submatrix(ib, jb);
            for (kb, l) in earlier.iter().zip(&left) {
                m = m.checked_sub(&l.checked_mul(&p.submatrix(kb, jb))?)?;
            }
            Ok(m)
        };
        let lam = schur(ib)?;
        let lam_inv = lam.inverse().map_err(|e| match e {
            FieldError::Singular => AlgorithmError::SingularBlock { block: bi },
            other => other.into(),
        })?;
        let row: Vec<MatrixRF> =
            blocks[bi + 1..].iter().map(|jb| Ok(lam_inv.checked_mul(&schur(jb)?)?)).collect::<Result<_, AlgorithmError>>()?;
        lambda.place(ib, ib, &lam);
        for (jb, block) in blocks[bi + 1..].iter().zip(&row) {
            p.place(ib, jb, block);
        }
    }
    Ok((p, lambda))
}

/// `X[u][c] = q^{d_u}·Σ_v P[v][u]·Y[v][c]`.
pub fn compute_x(p: &MatrixRF, y: &MatrixRF, d_u: &[u32]) -> Result<MatrixRF, AlgorithmError> {
    if !p.is_square() || p.rows() != y.rows() || d_u.len() != p.rows() {
        return Err(AlgorithmError::Shape(format!(
            "P is {}x{}, Y is {}x{}, {} exponents",
            p.rows(),
            p.cols(),
            y.rows(),
            y.cols(),
            d_u.len()
        )));
    }
    let mut x = p.transpose().checked_mul(y)?;
    for (u, &du) in d_u.iter().enumerate() {
        for c in 0..x.cols() {
            let shifted = x.get(u, c).shift(du as usize);
            x.set(u, c, shifted);
        }
    }
    Ok(x)
}

/// `ᵗPΛP − Ω`.
pub fn factorization_residual(p: &MatrixRF, lambda: &MatrixRF, omega: &MatrixRF) -> Result<MatrixRF, AlgorithmError> {
    Ok(p.transpose().checked_mul(lambda)?.checked_mul(p)?.checked_sub(omega)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: usize,
    pub col: usize,
    pub row_label: String,
    pub col_label: String,
    pub expected: String,
    pub computed: String,
}

/// Exact cell-by-cell comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub rows: usize,
    pub cols: usize,
    pub compared: usize,
    pub skipped: Vec<(usize, usize)>,
    pub mismatches: Vec<CellMismatch>,
}

impl Verdict {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn matched(&self) -> usize {
        self.compared - self.mismatches.len()
    }
}

/// Compares `computed` against `expected`; `None` cells are skipped.
pub fn compare_cells(
    computed: &MatrixRF,
    expected: &[Vec<Option<RatFunc>>],
    row_labels: &[String],
    col_labels: &[String],
) -> Result<Verdict, AlgorithmError> {
    if expected.len() != computed.rows() || expected.iter().any(|r| r.len() != computed.cols()) {
        return Err(AlgorithmError::Shape(format!(
            "computed {}x{} against expected {}x{}",
            computed.rows(),
            computed.cols(),
            expected.len(),
            expected.first().map_or(0, Vec::len)
        )));
    }
    let label = |labels: &[String], i: usize| labels.get(i).cloned().unwrap_or_else(|| i.to_string());
    let mut verdict =
        Verdict { rows: computed.rows(), cols: computed.cols(), compared: 0, skipped: Vec::new(), mismatches: Vec::new() };
    for (i, row) in expected.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            match cell {
                None => verdict.skipped.push((i, j)),
                Some(e) => {
                    verdict.compared += 1;
                    if e != computed.get(i, j) {
                        verdict.mismatches.push(CellMismatch {
                            row: i,
                            col: j,
                            row_label: label(row_labels, i),
                            col_label: label(col_labels, j),
                            expected: e.to_string(),
                            computed: computed.get(i, j).to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(verdict)
}

fn dense(m: &MatrixRF) -> Vec<Vec<Option<RatFunc>>> {
    (0..m.rows()).map(|i| m.row(i).iter().cloned().map(Some).collect()).collect()
}

pub fn compare_with_target(
    x: &MatrixRF,
    target: &MatrixRF,
    row_labels: &[String],
    col_labels: &[String],
) -> Result<Verdict, AlgorithmError> {
    compare_cells(x, &dense(target), row_labels, col_labels)
}

/// Outcome of one pipeline run.
#[derive(Debug, Clone)]
pub struct LusztigResult {
    pub case: String,
    pub conjectural: bool,
    pub d: u32,
    pub pair_labels: Vec<String>,
    pub row_labels: Vec<String>,
    pub column_labels: Vec<String>,
    pub columns: Vec<ColumnClass>,
    pub omega: MatrixRF,
    pub p: MatrixRF,
    pub lambda: MatrixRF,
    pub y: MatrixRF,
    pub x: MatrixRF,
    pub residual_zero: bool,
    pub omega_surd_free: bool,
    /// `(matrix, row, col)` of entries that did not reduce to polynomials.
    pub non_polynomial: Vec<(String, usize, usize)>,
    pub orthogonality: OrthogonalityReport,
    pub sizes_from_columns: Option<Vec<usize>>,
    pub verdict: Verdict,
    pub omega_check: Option<Verdict>,
    pub p_check: Option<Verdict>,
    pub lambda_check: Option<Verdict>,
    pub defects: Vec<Defect>,
}

impl LusztigResult {
    /// Every structural and table check passed; always `true` for conjectural runs.
    pub fn passes(&self) -> bool {
        self.conjectural || self.failures().is_empty()
    }

    /// Names of the failing checks.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.residual_zero {
            out.push("factorization residual".to_string());
        }
        if !self.omega_surd_free {
            out.push("omega surd-free".to_string());
        }
        if !self.non_polynomial.is_empty() {
            out.push("polynomial entries".to_string());
        }
        if !self.orthogonality.passes() {
            out.push("coset orthogonality".to_string());
        }
        if self.sizes_from_columns.as_deref() != Some(&self.columns.iter().map(|c| c.size).collect::<Vec<_>>()[..]) {
            out.push("column-derived class sizes".to_string());
        }
        if !self.verdict.passes() {
            out.push("target table".to_string());
        }
        for (name, check) in [("omega", &self.omega_check), ("P", &self.p_check), ("Lambda", &self.lambda_check)] {
            if check.as_ref().is_some_and(|v| !v.passes()) {
                out.push(format!("expected {name}"));
            }
        }
        out
    }

    pub fn lambda_is_diagonal(&self) -> bool {
        (0..self.lambda.rows()).all(|i| (0..self.lambda.cols()).all(|j| i == j || self.lambda.get(i, j).is_zero()))
    }
}

fn polynomial_violations(name: &str, m: &MatrixRF) -> Vec<(String, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_polynomial().is_none() {
                out.push((name.to_string(), i, j));
            }
        }
    }
    out
}

/// Ω → (P, Λ) → Y → X, then every comparison the bundle provides.
pub fn run_case(bundle: &CaseBundle) -> Result<LusztigResult, CaseError> {
    let d = bundle.d;
    let omega = build_omega(bundle)?;
    let (p, lambda) = solve_block_factorization(&omega, &bundle.block_ids())?;
    let y = build_y_table(&bundle.springer, &bundle.layout, &bundle.choices, d).map_err(AlgorithmError::from)?;
    let x = compute_x(&p, &y, &bundle.d_values())?;
    let residual_zero = factorization_residual(&p, &lambda, &omega)?.is_zero();
    let omega_surd_free =
        (0..omega.rows()).all(|i| (0..omega.cols()).all(|j| omega.get(i, j).numer().is_surd_free()));
    let mut non_polynomial = Vec::new();
    for (name, m) in [("P", &p), ("Lambda", &lambda), ("X", &x)] {
        non_polynomial.extend(polynomial_violations(name, m));
    }

    let pair_labels: Vec<String> =
        bundle.springer.iter().map(|s| format!("({},{})", s.class_label, s.character_label)).collect();
    let column_labels = bundle.layout.split_class_labels.clone();
    let row_labels = bundle.target.row_labels.clone();
    let verdict = compare_with_target(&x, &bundle.target.matrix, &row_labels, &column_labels)?;

    let omega_check =
        bundle.expected.omega.as_ref().map(|e| compare_with_target(&omega, e, &pair_labels, &pair_labels)).transpose()?;
    let lambda_check = bundle
        .expected
        .lambda
        .as_ref()
        .map(|e| compare_with_target(&lambda, e, &pair_labels, &pair_labels))
        .transpose()?;
    let p_check = bundle
        .expected
        .p
        .as_ref()
        .map(|cells| {
            let rf: Vec<Vec<Option<RatFunc>>> =
                cells.iter().map(|r| r.iter().map(|c| c.clone().map(RatFunc::from_poly)).collect()).collect();
            compare_cells(&p, &rf, &pair_labels, &pair_labels)
        })
        .transpose()?;

    let sizes = bundle.weyl.sizes();
    let orthogonality = coset_orthogonality_check(&bundle.coset_chars, &sizes, bundle.weyl.order());
    let sizes_from_columns = derive_sizes_from_columns(&bundle.coset_chars, bundle.weyl.order()).ok();

    Ok(LusztigResult {
        case: bundle.name.clone(),
        conjectural: bundle.target.status == TargetStatus::Conjectural,
        d,
        pair_labels,
        row_labels,
        column_labels,
        columns: bundle.weyl.columns.clone(),
        omega,
        p,
        lambda,
        y,
        x,
        residual_zero,
        omega_surd_free,
        non_polynomial,
        orthogonality,
        sizes_from_columns,
        verdict,
        omega_check,
        p_check,
        lambda_check,
        defects: bundle.expected.defects.clone(),
    })
}

/// Index runs of the Springer blocks, as used by the solver.
pub fn springer_blocks(bundle: &CaseBundle) -> Vec<Vec<usize>> {
    blocks_of(&bundle.springer)
}
