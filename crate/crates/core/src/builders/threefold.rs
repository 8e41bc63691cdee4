//! The edge case for blowing up a smooth projective threefold along a
//! smooth curve: the exceptional divisor is the ruled surface of the
//! conormal bundle, and the twisted pullback bundle generates on it exactly
//! when the conormal bundle is unstable and the restriction degree avoids
//! the destabilizing degree while staying below its complement.
//!
//! The hypersurface helper packages the one-parameter family of examples: a
//! degree-r hypersurface in projective 4-space containing a moving line has
//! conormal degree r-3 on the line, destabilizing quotient degree -b for a
//! normal-bundle summand degree b in {0, 1}, and canonical restriction
//! degree r-5.

use alloc::format;
use alloc::string::String;

use super::BuildError;

/// Conormal bundle of the blown-up curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConormalBundle {
    Unstable {
        /// Degree of the conormal bundle.
        degree: i64,
        /// Degree of the maximal destabilizing quotient line bundle;
        /// strictly less than half the bundle degree.
        quotient_degree: i64,
    },
    Semistable,
}

/// Decides the generation condition on the exceptional ruled surface:
/// requires an unstable conormal bundle with `deg != d` and `deg < e - d`.
pub fn threefold_edge_check(
    restriction_degree: i64,
    conormal: &ConormalBundle,
) -> Result<bool, BuildError> {
    match *conormal {
        ConormalBundle::Semistable => Ok(false),
        ConormalBundle::Unstable {
            degree,
            quotient_degree,
        } => {
            if 2 * quotient_degree >= degree {
                return Err(BuildError::InvalidRuledData {
                    reason: format!(
                        "destabilizing quotient degree {quotient_degree} must satisfy 2d < e = {degree}"
                    ),
                });
            }
            Ok(restriction_degree != quotient_degree
                && restriction_degree < degree - quotient_degree)
        }
    }
}

/// Parameters `(restriction degree, conormal degree, quotient degree)` for
/// a line moving on a smooth degree-`r` hypersurface in projective 4-space
/// (`r > 5`), where the normal bundle splits with larger summand degree
/// `b` in `{0, 1}`.
pub fn hypersurface_line_params(
    hypersurface_degree: i64,
    normal_summand_degree: i64,
) -> Result<(i64, i64, i64), BuildError> {
    if hypersurface_degree <= 5 {
        return Err(BuildError::OutOfHypothesis {
            reason: format!(
                "hypersurface degree must exceed 5 for the general-type range, got {hypersurface_degree}"
            ),
        });
    }
    if !(normal_summand_degree == 0 || normal_summand_degree == 1) {
        return Err(BuildError::OutOfHypothesis {
            reason: String::from("the moving-line summand degree must be 0 or 1"),
        });
    }
    Ok((
        hypersurface_degree - 5,
        hypersurface_degree - 3,
        -normal_summand_degree,
    ))
}
