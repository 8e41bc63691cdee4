//! Exact rational arithmetic, vectors, matrices, linear solving and LP
//! feasibility with Farkas certificates.
//!
//! Foundation for the cone and surface layers. All arithmetic is exact; cone
//! boundary cases sit exactly on hyperplanes and must never be decided by a
//! rounded comparison.

mod lp;
mod mat;
mod rat;
mod solve;
mod vec;

pub use lp::{
    lp_feasible, verify_farkas, FarkasCertificate, FeasibilityResult, LinearConstraint, Relation,
};
pub use mat::RatMat;
pub use rat::{ParseRatError, Rat};
pub use solve::{
    determinant, is_negative_definite, nullspace_basis, rank, solve_linear, symmetric_signature,
};
pub use vec::RatVec;

use alloc::string::String;
use core::fmt;

/// Errors from the exact kernel. All of them are usage errors: the caller
/// passed inconsistently sized data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// Two objects that had to share a dimension did not.
    DimMismatch { expected: usize, got: usize },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A symmetric matrix was required.
    NotSymmetric,
    /// Matrix data length did not match `rows * cols`.
    BadShape { rows: usize, cols: usize, len: usize },
    /// An internal pivoting invariant failed; carries a short description.
    Internal(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DimMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            ExactError::NotSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            ExactError::NotSymmetric => write!(f, "matrix is not symmetric"),
            ExactError::BadShape { rows, cols, len } => {
                write!(f, "matrix data of length {len} cannot fill {rows}x{cols}")
            }
            ExactError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}
