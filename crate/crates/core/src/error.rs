use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
}

/// Errors raised while building or manipulating a Lie algebra.
///
/// Basis indices in messages are 1-based to match the `e1, e2, ...` notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("bracket [e{i},e{j}] out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    #[error("bracket [e{i},e{j}] must have i < j")]
    UnorderedPair { i: usize, j: usize },
    #[error("bracket [e{i},e{j}] given twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("coefficient vector for [e{i},e{j}] has length {found}, expected {dim}")]
    CoefficientLength {
        i: usize,
        j: usize,
        found: usize,
        dim: usize,
    },
    #[error("Jacobi identity fails on (e{i}, e{j}, e{k}); defect {defect:?}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        defect: Vec<Rational>,
    },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not central")]
    NotCentral,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("algebra is abelian")]
    Abelian,
    #[error("Chevalley-Eilenberg complex is not a complex (d2 d3 != 0)")]
    ComplexNotExact,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
