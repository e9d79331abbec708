//! Diagonalization of 𝔍(3, ℂ^C) under the compact group.
//!
//! Along the idempotents ι, ῑ a Hermitian X is a single complex 3×3 matrix
//! `M = X_a` (with `X_b = ᵗM`), and `f₆((A,B), 1)` acts as `M ↦ A_a M ᵗB_b`.
//! For τ-real A, B the components are unitary, so diagonalizing X is a
//! singular value decomposition `M = UΣV†` with the two unitaries pushed
//! into SU(3). The determinant phases end up on the smallest singular
//! value, which leaves the first two diagonal entries non-negative reals.

use nalgebra::{Matrix3, SVD};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{Cx, RingTag};
use crate::error::AlgorithmError;
use crate::jordan::JordanElement;
use crate::matgroups::{FMat, GMatrix};
use crate::operators::{f6cc, to_gmatrix, JOperator};

/// Off-diagonal tolerance.
pub const DIAG_TOL: f64 = 1e-8;
/// Iteration cap handed to the SVD.
pub const DIAG_MAX_ITER: usize = 500;

#[derive(Clone, Debug)]
pub struct DiagResult {
    /// `f₆((A, B), 1)`; maps the input to `diag(diagonal)`.
    pub transform: JOperator<f64>,
    pub a: GMatrix<f64>,
    pub b: GMatrix<f64>,
    pub diagonal: [Cx<f64>; 3],
    /// Largest off-diagonal coefficient of `transform(X)`.
    pub residual: f64,
    /// 0 when the input was already in canonical diagonal form, else 1
    /// (one SVD pass).
    pub iterations: usize,
}

impl DiagResult {
    pub fn to_json(&self) -> Value {
        json!({
            "transform": self.transform.to_json(),
            "A": self.a.to_json(),
            "B": self.b.to_json(),
            "diagonal": self.diagonal.iter().map(Cx::to_json).collect::<Vec<_>>(),
            "residual": self.residual,
            "iterations": self.iterations,
            "tol": DIAG_TOL,
        })
    }
}

fn to_fmat(m: &Matrix3<Complex64>) -> FMat<f64> {
    FMat::from_fn(3, |i, j| Cx::from_c64(m[(i, j)]))
}

fn nonneg_real(z: &Cx<f64>, tol: f64) -> bool {
    z.im.abs() <= tol && z.re >= -tol
}

fn off_diagonal(x: &JordanElement<f64>) -> f64 {
    x.x().iter().map(|s| s.max_abs()).fold(0.0, f64::max)
}

/// Transform of X ∈ 𝔍(3, ℂ^C) to diagonal form.
pub fn diagonalize(x: &JordanElement<f64>) -> Result<DiagResult, AlgorithmError> {
    if x.tag() != RingTag::CC {
        return Err(AlgorithmError::Precondition(format!("diagonalize works on 𝔍(3,ℂ^C), got {}", x.tag())));
    }
    let scale = x.max_abs().max(1.0);
    let id = GMatrix::identity(RingTag::CC, 3);
    if off_diagonal(x) <= DIAG_TOL * scale {
        let xi = x.xi();
        let canonical = nonneg_real(&xi[0], DIAG_TOL) && nonneg_real(&xi[1], DIAG_TOL);
        if canonical {
            return Ok(DiagResult {
                transform: f6cc(&id, &id, false)?,
                a: id.clone(),
                b: id,
                diagonal: xi.clone(),
                residual: off_diagonal(x),
                iterations: 0,
            });
        }
    }

    let (ma, _) = to_gmatrix(x).split()?;
    let m = Matrix3::from_fn(|i, j| ma.at(i, j).to_c64());
    let svd = SVD::try_new(m, true, true, f64::EPSILON, DIAG_MAX_ITER)
        .ok_or(AlgorithmError::NoConvergence(DIAG_MAX_ITER, off_diagonal(x)))?;
    let (u, vt) = (svd.u.expect("requested"), svd.v_t.expect("requested"));
    // Sort singular values descending.
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| svd.singular_values[j].partial_cmp(&svd.singular_values[i]).expect("finite"));
    let u = Matrix3::from_fn(|i, j| u[(i, order[j])]);
    let v = Matrix3::from_fn(|i, j| vt[(order[j], i)].conj());
    let sigma: Vec<f64> = order.iter().map(|&k| svd.singular_values[k]).collect();

    // P = D_p U†, Q = D_q ᵗV with det P = det Q = 1.
    let (du, dv) = (u.determinant(), v.determinant());
    let mut p = u.adjoint();
    let mut q = v.transpose();
    for j in 0..3 {
        p[(2, j)] *= du;
        q[(2, j)] *= dv.conj();
    }
    let phase = du * dv.conj();
    let p_it = p.try_inverse().expect("unitary").transpose();
    let q_it = q.try_inverse().expect("unitary").transpose();
    let a = GMatrix::join(RingTag::CC, &to_fmat(&p), &to_fmat(&p_it));
    let b = GMatrix::join(RingTag::CC, &to_fmat(&q_it), &to_fmat(&q));
    let transform = f6cc(&a, &b, false)?;
    let y = transform.apply(x)?;
    let residual = off_diagonal(&y);
    let diagonal = [
        Cx::real(sigma[0]),
        Cx::real(sigma[1]),
        Cx::from_c64(phase * sigma[2]),
    ];
    if residual > DIAG_TOL * scale {
        return Err(AlgorithmError::NoConvergence(1, residual));
    }
    Ok(DiagResult { transform, a, b, diagonal, residual, iterations: 1 })
}
