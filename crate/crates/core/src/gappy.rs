//! Sensor selection for gappy reconstruction with a one-dimensional basis.
//!
//! Given a unit vector `u` spanning the approximation space and a matrix `Û`
//! with orthonormal columns spanning its complement, picking `n` sample rows
//! `P` to reconstruct `f` from `Pᵀf` leaves an error bounded by
//!
//! ```text
//! ‖(uᵀPPᵀu)⁻¹ uᵀPPᵀÛ‖₂  <=  ‖PᵀÛ‖_F / |Pᵀu|
//! ```
//!
//! The squared right-hand side is `Σ_{i∈P} a_i / Σ_{i∈P} b_i` with
//! `a_i = Σ_j Û_ij²` and `b_i = u_i²`, which is exactly the ratio-of-sums
//! problem. Everything here is binary64.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Array, Error, Result};
use crate::greedy::greedy_select;
use crate::model::{check_indices, FloatInstance, GreedyTrace, Selection};

/// Allowed deviation of `|u|` from one.
pub const UNIT_TOLERANCE: f64 = 1e-12;
/// Per-entry tolerance on `ÛᵀÛ = I` and `Ûᵀu = 0`.
pub const ORTHO_TOLERANCE: f64 = 1e-10;
/// Slack in `lhs <= rhs`.
pub const BOUND_TOLERANCE: f64 = 1e-12;
/// Relative tolerance on `rhs² = Σa/Σb`.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct GappyInstance {
    pub u: DVector<f64>,
    pub uhat: DMatrix<f64>,
    /// `a_i = Σ_j Û_ij²`, `b_i = u_i²`.
    pub instance: FloatInstance,
}

/// False for NaN.
fn within(x: f64, tol: f64) -> bool {
    x.abs() <= tol
}

/// Validates the basis pair and derives the ratio-of-sums arrays.
pub fn build_arrays(u: &DVector<f64>, uhat: &DMatrix<f64>) -> Result<GappyInstance> {
    let len = u.len();
    if uhat.nrows() != len {
        return Err(Error::DimensionMismatch {
            reason: format!("u has {len} entries but Û has {} rows", uhat.nrows()),
        });
    }
    if uhat.ncols() == 0 {
        return Err(Error::DimensionMismatch {
            reason: "Û has no columns".into(),
        });
    }
    let norm = u.norm();
    if !within(norm - 1.0, UNIT_TOLERANCE) {
        return Err(Error::NotUnit { norm });
    }
    let gram = uhat.transpose() * uhat;
    for r in 0..gram.nrows() {
        for c in 0..gram.ncols() {
            let v = gram[(r, c)];
            let target = if r == c { 1.0 } else { 0.0 };
            if !within(v - target, ORTHO_TOLERANCE) {
                return Err(Error::NotOrthonormal {
                    reason: format!("(ÛᵀÛ)[{},{}] = {v}", r + 1, c + 1),
                });
            }
        }
    }
    let cross = uhat.transpose() * u;
    if let Some((j, v)) = cross
        .iter()
        .enumerate()
        .find(|(_, v)| !within(**v, ORTHO_TOLERANCE))
    {
        return Err(Error::NotOrthonormal {
            reason: format!("(Ûᵀu)[{}] = {v}", j + 1),
        });
    }

    let b: Vec<f64> = u.iter().map(|x| x * x).collect();
    let a: Vec<f64> = uhat.row_iter().map(|row| row.norm_squared()).collect();
    if let Some(i) = b.iter().position(|&v| v == 0.0) {
        return Err(Error::ZeroRow {
            array: Array::B,
            index: i + 1,
        });
    }
    if let Some(i) = a.iter().position(|&v| v == 0.0) {
        return Err(Error::ZeroRow {
            array: Array::A,
            index: i + 1,
        });
    }
    Ok(GappyInstance {
        u: u.clone(),
        uhat: uhat.clone(),
        instance: FloatInstance::new(a, b)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// `‖(uᵀPPᵀu)⁻¹ uᵀPPᵀÛ‖₂`.
    pub lhs: f64,
    /// `‖PᵀÛ‖_F / |Pᵀu|`.
    pub rhs: f64,
    /// `Σ_{i∈P} a_i / Σ_{i∈P} b_i`.
    pub ratio: f64,
    /// `|rhs² - ratio| / ratio`.
    pub ratio_identity_error: f64,
}

impl BoundReport {
    pub fn bound_holds(&self) -> bool {
        self.lhs <= self.rhs + BOUND_TOLERANCE
    }

    pub fn identity_holds(&self) -> bool {
        self.ratio_identity_error <= IDENTITY_TOLERANCE
    }

    pub fn is_consistent(&self) -> bool {
        self.bound_holds() && self.identity_holds()
    }
}

/// Evaluates both sides of the bound for the sample rows `selection` (0-based).
pub fn bound_check(gappy: &GappyInstance, selection: &[usize]) -> Result<BoundReport> {
    check_indices(selection, gappy.u.len())?;
    let cols = gappy.uhat.ncols();
    let mut weight = 0.0;
    let mut frob_sq = 0.0;
    let mut projected = DVector::<f64>::zeros(cols);
    for &i in selection {
        let ui = gappy.u[i];
        let row = gappy.uhat.row(i);
        weight += ui * ui;
        frob_sq += row.norm_squared();
        projected += row.transpose() * ui;
    }
    if weight == 0.0 {
        return Err(Error::DegenerateSelection);
    }
    let lhs = projected.norm() / weight;
    let rhs = frob_sq.sqrt() / weight.sqrt();
    let ratio = gappy.instance.ratio_of(selection)?.to_f64();
    Ok(BoundReport {
        lhs,
        rhs,
        ratio,
        ratio_identity_error: (rhs * rhs - ratio).abs() / ratio,
    })
}

#[derive(Debug, Clone)]
pub struct GappySolution {
    pub gappy: GappyInstance,
    pub selection: Selection<f64>,
    pub trace: GreedyTrace<f64>,
    pub report: BoundReport,
}

/// Greedy sample-row selection followed by a bound check.
pub fn gappy_solve(u: &DVector<f64>, uhat: &DMatrix<f64>, n: usize) -> Result<GappySolution> {
    let gappy = build_arrays(u, uhat)?;
    let (selection, trace) = greedy_select(&gappy.instance, n)?;
    let report = bound_check(&gappy, &selection.indices)?;
    Ok(GappySolution {
        gappy,
        selection,
        trace,
        report,
    })
}

/// Seeded orthonormal pair: `u` of length `len` and `Û` of shape `len × cols`.
///
/// A `len × (cols + 1)` matrix of uniform entries in `[-1, 1)` is orthonormalized
/// by QR; `u` is the first column and `Û` the rest. Draws that leave a zero
/// entry in `u` or a zero row in `Û` are discarded and redrawn.
///
/// # Panics
///
/// If `cols + 1 > len` or `cols == 0`.
pub fn random_orthonormal_pair(seed: u64, len: usize, cols: usize) -> (DVector<f64>, DMatrix<f64>) {
    assert!(cols >= 1 && cols < len, "need 1 <= cols < len");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = DMatrix::from_fn(len, cols + 1, |_, _| rng.random_range(-1.0..1.0));
        let q = m.qr().q();
        let u = q.column(0).into_owned();
        let uhat = q.columns(1, cols).into_owned();
        let has_zero = u.iter().any(|&x| x == 0.0) || uhat.row_iter().any(|r| r.norm_squared() == 0.0);
        if !has_zero {
            return (u, uhat);
        }
    }
}
