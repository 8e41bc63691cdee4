//! Constructors turning the standard worked families into surface models
//! with correct Gram data, curve catalogs, cone generators and flags, plus
//! the special-purpose integer checks attached to blow-ups of the plane and
//! to threefold blow-ups along a curve.
//!
//! Basis conventions are fixed here once: ruled surfaces use the (fiber,
//! tautological-section) basis `(f, xi)`, blow-ups of the plane use
//! `(H, E1, ..., Er)`. Every class these builders emit is stored in those
//! bases.

mod blowup;
mod curve;
mod ruled;
mod threefold;
mod toric;

pub use blowup::{
    anticanonical_obstruction, blowup_point_bundle_check, build_blowup_p2, dq_class, dq_pair,
    nagata_excluded, BlowupP2Config, BundleCheck, PointConfig,
};
pub use curve::{curve_tensor_ample, CurveComponent, CurveModel};
pub use ruled::{build_ruled, ruled_anticanonical_class, AnticanonicalClass, RuledData, Stability};
pub use threefold::{hypersurface_line_params, threefold_edge_check, ConormalBundle};
pub use toric::{build_toric, ToricCycle};

use alloc::string::String;
use core::fmt;

use crate::surface::SurfaceError;

/// Errors from the builder layer: invalid family parameters or arity
/// mismatches. Model-construction failures are forwarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    EmptyCurveModel,
    ArityMismatch { expected: usize, got: usize },
    InvalidRuledData { reason: String },
    InvalidFan { reason: String },
    NonPositiveParameter { name: &'static str },
    OutOfHypothesis { reason: String },
    Surface(SurfaceError),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::EmptyCurveModel => write!(f, "a curve model needs at least one component"),
            BuildError::ArityMismatch { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            BuildError::InvalidRuledData { reason } => write!(f, "invalid ruled data: {reason}"),
            BuildError::InvalidFan { reason } => write!(f, "invalid fan cycle: {reason}"),
            BuildError::NonPositiveParameter { name } => {
                write!(f, "parameter {name} must be positive")
            }
            BuildError::OutOfHypothesis { reason } => write!(f, "{reason}"),
            BuildError::Surface(e) => write!(f, "{e}"),
        }
    }
}

impl From<SurfaceError> for BuildError {
    fn from(e: SurfaceError) -> Self {
        BuildError::Surface(e)
    }
}
