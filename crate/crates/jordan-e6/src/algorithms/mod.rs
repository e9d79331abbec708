//! Constructive procedures on 𝔍(3, ℂ^C) and the Lie algebras of the groups
//! acting on it: idempotent and full diagonalization, reduction of a
//! determinant-one element to E, bicomplex cube roots, numerical and exact
//! Lie-algebra dimension counts, and the splitting `φ = δ + T̃`.
//!
//! The diagonalization routines and cube roots work in floating point; the
//! dimension count and the decomposition are generic over the backend.

mod cube_root;
mod decompose;
mod diagonalize;
mod idempotent;
mod lie_dim;
mod reduce;

pub use cube_root::{cube_root_cc, CubeRoot};
pub use decompose::{decompose_phi, jordan_mult_op, lie_algebra_sample, lie_residual, PhiDecomposition};
pub use diagonalize::{diagonalize, DiagResult, DIAG_MAX_ITER, DIAG_TOL};
pub use idempotent::{diag_idempotent, IdempotentCase, IdempotentResult};
pub use lie_dim::{euclidean_part_dim, lie_dim, LieDimResult, LieField, SP3_DIM};
pub use reduce::{alpha12, alpha12_scaling, alpha23, alpha23_scaling, reduce_to_e, ReduceResult};
