use thiserror::Error;

use crate::algebra::RingTag;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingTag, RingTag),
    #[error("{op} is undefined on {ring}")]
    Unsupported { op: &'static str, ring: RingTag },
    #[error("element is not invertible (norm vanishes)")]
    NotInvertible,
    #[error("element is not fixed by the required involution (residual {0:e})")]
    NotFixed(f64),
    #[error("expected {expected} coefficients, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JordanError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("matrix is not hermitian (residual {0:e})")]
    NotHermitian(f64),
    #[error("diagonal entries must lie in the outer field")]
    DiagonalNotScalar,
    #[error("expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("operator is singular")]
    Singular,
    #[error("operator is conjugate-linear; {0} needs a linear operator")]
    Antilinear(&'static str),
    #[error("operator dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("involution {0} is not available on {1}")]
    MissingInvolution(&'static str, RingTag),
    #[error("operator is not fixed by the required involution (residual {0:e})")]
    NotFixed(f64),
    #[error("matrix argument rejected: {0}")]
    Matrix(String),
    #[error("conjugated matrix is not in the image of k (residual {0:e})")]
    NotInKImage(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix size {got} where {expected} was required")]
    Size { expected: usize, got: usize },
    #[error("matrix is not in {group}: {reason}")]
    NotMember { group: &'static str, reason: String },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("unknown constant {0:?}")]
    UnknownConstant(String),
    #[error("matrix lacks the 2x2 quaternionic block structure (residual {0:e})")]
    NotQuaternionic(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgorithmError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("input violates a precondition: {0}")]
    Precondition(String),
    #[error("no convergence after {0} sweeps (off-diagonal norm {1:e})")]
    NoConvergence(usize, f64),
    #[error("rank did not stabilize: {0} with {1} samples, {2} with {3}")]
    RankUnstable(usize, usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algorithm(#[from] AlgorithmError),
    #[error("unknown backend {0:?} (expected exact or float)")]
    UnknownBackend(String),
    #[error("malformed report: {0}")]
    Report(String),
}
