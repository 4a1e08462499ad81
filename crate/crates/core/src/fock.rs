//! Truncated Fock-space matrix realizations of a, a†, N, K and numerical
//! verification of the defining relations, the generalized commutator
//! identity and the Casimir commutants.
//!
//! Relations are asserted only on the leading block the cutoff cannot
//! reach: D−1 columns for degree-1 relations, D−n−1 columns for the
//! degree-n identity.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::params::DeformationParams;
use crate::structure::{bracket, f_closed, Kappa};
use crate::{Error, Result};

/// Dense complex realizations of the four generators at cutoff `dim`.
///
/// a is the lower shift with √f(n) at (n−1, n); adag its conjugate
/// transpose; n_op and k_op are diagonal with entries n and (−1)^n.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorQuadruple {
    pub dim: usize,
    pub a: DMatrix<Complex64>,
    pub adag: DMatrix<Complex64>,
    pub n_op: DMatrix<Complex64>,
    pub k_op: DMatrix<Complex64>,
}

/// Residual norms per relation name: max absolute entry of lhs − rhs
/// over the checked columns, divided by max(1, |lhs|∞, |rhs|∞) so the
/// tolerance is meaningful when entries grow with the cutoff.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub residuals: BTreeMap<String, f64>,
    /// Number of leading basis columns the residuals were taken over.
    pub checked_block: usize,
    pub tol: f64,
    pub pass: bool,
}

impl ResidualReport {
    fn from_residuals(residuals: BTreeMap<String, f64>, checked_block: usize, tol: f64) -> Self {
        let pass = residuals.values().all(|r| *r <= tol);
        ResidualReport { residuals, checked_block, tol, pass }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.values().cloned().fold(0.0, f64::max)
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Max absolute entry over the leading `cols` columns.
fn max_abs_over_cols(m: &DMatrix<Complex64>, cols: usize) -> f64 {
    let mut max = 0.0_f64;
    for j in 0..cols.min(m.ncols()) {
        for i in 0..m.nrows() {
            max = max.max(m[(i, j)].norm());
        }
    }
    max
}

/// Relative residual of lhs = rhs over columns col_lo..col_hi.
fn relative_residual(
    lhs: &DMatrix<Complex64>,
    rhs: &DMatrix<Complex64>,
    col_lo: usize,
    col_hi: usize,
) -> f64 {
    let cols = col_hi - col_lo;
    let view = |m: &DMatrix<Complex64>| m.columns(col_lo, cols).into_owned();
    let diff = max_abs_over_cols(&view(&(lhs - rhs)), cols);
    let scale = max_abs_over_cols(&view(lhs), cols).max(max_abs_over_cols(&view(rhs), cols));
    diff / scale.max(1.0)
}

/// Diagonal q^{αN+β}, read off the (diagonal) number operator so window
/// realizations with an N offset work unchanged.
fn q_alpha_n_beta(ops: &OperatorQuadruple, params: &DeformationParams) -> DMatrix<Complex64> {
    DMatrix::from_fn(ops.dim, ops.dim, |i, j| {
        if i == j {
            real(params.q.powf(params.alpha * ops.n_op[(i, i)].re + params.beta))
        } else {
            Complex64::default()
        }
    })
}

/// Builds the Fock realization at cutoff `dim` from f_closed.
pub fn build_fock(params: &DeformationParams, dim: usize) -> Result<OperatorQuadruple> {
    if dim < 2 {
        return Err(Error::Domain(format!("dim must be >= 2, got {dim}")));
    }
    let mut f_values = Vec::with_capacity(dim);
    for n in 0..dim {
        let f = f_closed(params, n as i64)?.value;
        if f < 0.0 {
            return Err(Error::Positivity { n: n as i64, value: f });
        }
        f_values.push(f);
    }
    Ok(quadruple_from_lambdas(&f_values, 0.0, 1.0))
}

/// Shared constructor: a|m⟩ = √λ_m |m−1⟩ over the basis m = 0..D−1, with
/// N = diag(n0 + m) and K = diag(c0 (−1)^m).
pub(crate) fn quadruple_from_lambdas(lambdas: &[f64], n0: f64, c0: f64) -> OperatorQuadruple {
    let dim = lambdas.len();
    let mut a = DMatrix::from_element(dim, dim, Complex64::default());
    for m in 1..dim {
        a[(m - 1, m)] = real(lambdas[m].sqrt());
    }
    let adag = a.adjoint();
    let n_op = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j { real(n0 + i as f64) } else { Complex64::default() }
    });
    let k_op = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j { real(c0 * if i % 2 == 0 { 1.0 } else { -1.0 }) } else { Complex64::default() }
    });
    OperatorQuadruple { dim, a, adag, n_op, k_op }
}

/// Checks the six defining relations on the leading D−1 columns.
pub fn verify_relations(ops: &OperatorQuadruple, params: &DeformationParams, tol: f64) -> ResidualReport {
    verify_relations_on(ops, params, tol, 0, ops.dim - 1)
}

/// Same checks restricted to columns `col_lo..col_hi` (exclusive). Window
/// realizations whose lowest λ is nonzero need the first column excluded
/// as well, since a drops below the window there.
pub fn verify_relations_on(
    ops: &OperatorQuadruple,
    params: &DeformationParams,
    tol: f64,
    col_lo: usize,
    col_hi: usize,
) -> ResidualReport {
    let pn = real(params.p.powf(params.nu));
    let q_diag = q_alpha_n_beta(ops, params);
    let identity = DMatrix::from_diagonal_element(ops.dim, ops.dim, real(1.0));
    let two_gamma = real(2.0 * params.gamma);

    let rel = |lhs: DMatrix<Complex64>, rhs: DMatrix<Complex64>| {
        relative_residual(&lhs, &rhs, col_lo, col_hi)
    };
    let mut residuals = BTreeMap::new();
    residuals.insert(
        "R1_defining".to_string(),
        rel(&ops.a * &ops.adag, &ops.adag * &ops.a * pn + (&identity + &ops.k_op * two_gamma) * &q_diag),
    );
    residuals.insert(
        "R2_number_a".to_string(),
        rel(&ops.n_op * &ops.a - &ops.a * &ops.n_op, -&ops.a),
    );
    residuals.insert(
        "R3_number_adag".to_string(),
        rel(&ops.n_op * &ops.adag - &ops.adag * &ops.n_op, ops.adag.clone()),
    );
    residuals.insert("R4_parity_a".to_string(), rel(&ops.k_op * &ops.a, -(&ops.a * &ops.k_op)));
    residuals.insert("R5_parity_adag".to_string(), rel(&ops.k_op * &ops.adag, -(&ops.adag * &ops.k_op)));
    residuals.insert(
        "R6_number_parity".to_string(),
        rel(&ops.n_op * &ops.k_op, &ops.k_op * &ops.n_op),
    );
    ResidualReport::from_residuals(residuals, col_hi - col_lo, tol)
}

/// Checks a(a†)^n − p^{nν}(a†)^n a = [n;α,β,ν;γK] (a†)^{n−1} q^{αN+β}
/// on the leading D−n−1 columns, with the bracket realized as the
/// diagonal matrix bracket(n, (−1)^m) on basis index m.
pub fn verify_bracket_identity(
    ops: &OperatorQuadruple,
    params: &DeformationParams,
    n: usize,
    tol: f64,
) -> Result<ResidualReport> {
    if n < 1 || n > ops.dim - 2 {
        return Err(Error::Domain(format!(
            "bracket identity needs 1 <= n <= D-2 = {}, got {n}",
            ops.dim - 2
        )));
    }
    let mut adag_n = DMatrix::from_diagonal_element(ops.dim, ops.dim, real(1.0));
    for _ in 0..n - 1 {
        adag_n = &ops.adag * adag_n;
    }
    let adag_nm1 = adag_n.clone();
    adag_n = &ops.adag * adag_n;

    let pnn = real(params.p.powf(params.nu).powf(n as f64));
    let lhs = &ops.a * &adag_n - &adag_n * &ops.a * pnn;

    let mut bracket_diag = DMatrix::from_element(ops.dim, ops.dim, Complex64::default());
    for m in 0..ops.dim {
        let b = bracket(params, n as i64, Kappa::from_parity(m as i64))?;
        bracket_diag[(m, m)] = real(b.value);
    }
    let rhs = bracket_diag * adag_nm1 * q_alpha_n_beta(ops, params);

    let cols = ops.dim - n - 1;
    let mut residuals = BTreeMap::new();
    residuals.insert(format!("bracket_identity_n{n}"), relative_residual(&lhs, &rhs, 0, cols));
    Ok(ResidualReport::from_residuals(residuals, cols, tol))
}

/// Forms the Casimirs C1 = K², C2 = K e^{iπN}, C3 = e^{2iπN} from the
/// diagonals and checks they commute with a and a†; on the Fock
/// realization C2 must equal the identity (w = 1).
pub fn casimir_check(ops: &OperatorQuadruple, tol: f64) -> ResidualReport {
    let diag_exp = |scale: f64| {
        DMatrix::from_fn(ops.dim, ops.dim, |i, j| {
            if i == j {
                (Complex64::new(0.0, scale * std::f64::consts::PI) * ops.n_op[(i, i)]).exp()
            } else {
                Complex64::default()
            }
        })
    };
    let c1 = &ops.k_op * &ops.k_op;
    let c2 = &ops.k_op * diag_exp(1.0);
    let c3 = diag_exp(2.0);

    let cols = ops.dim - 1;
    let mut residuals = BTreeMap::new();
    for (name, c) in [("C1", &c1), ("C2", &c2), ("C3", &c3)] {
        residuals.insert(
            format!("{name}_commutes_a"),
            relative_residual(&(c * &ops.a), &(&ops.a * c), 0, cols),
        );
        residuals.insert(
            format!("{name}_commutes_adag"),
            relative_residual(&(c * &ops.adag), &(&ops.adag * c), 0, cols),
        );
    }
    let identity = DMatrix::from_diagonal_element(ops.dim, ops.dim, real(1.0));
    residuals.insert(
        "C2_equals_identity".to_string(),
        relative_residual(&c2, &identity, 0, ops.dim),
    );
    ResidualReport::from_residuals(residuals, cols, tol)
}
