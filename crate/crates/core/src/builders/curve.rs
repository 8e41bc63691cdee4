//! Proper curve models: a list of irreducible components with the degree of
//! the bundle under test on each. On an integral projective curve a bundle
//! generates iff its degree is nonzero, and on a reducible one iff it does
//! so on every component, so the classifier is total (never `Unknown`).

use alloc::string::String;
use alloc::vec::Vec;

use crate::surface::{Evidence, Verdict};

use super::BuildError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveComponent {
    pub name: String,
    pub degree: i64,
}

/// A proper curve presented by its irreducible components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveModel {
    components: Vec<CurveComponent>,
}

impl CurveModel {
    pub fn new(components: Vec<CurveComponent>) -> Result<Self, BuildError> {
        if components.is_empty() {
            return Err(BuildError::EmptyCurveModel);
        }
        Ok(CurveModel { components })
    }

    pub fn components(&self) -> &[CurveComponent] {
        &self.components
    }

    /// Tensor-ample iff every component degree is nonzero.
    pub fn tensor_ample(&self) -> Verdict {
        classify_degrees(
            &self.components,
            &self
                .components
                .iter()
                .map(|c| c.degree)
                .collect::<Vec<_>>(),
        )
    }
}

/// Classifies a bundle given by its per-component degrees on the model.
pub fn curve_tensor_ample(model: &CurveModel, degrees: &[i64]) -> Result<Verdict, BuildError> {
    if degrees.len() != model.components.len() {
        return Err(BuildError::ArityMismatch {
            expected: model.components.len(),
            got: degrees.len(),
        });
    }
    Ok(classify_degrees(&model.components, degrees))
}

fn classify_degrees(components: &[CurveComponent], degrees: &[i64]) -> Verdict {
    for (index, (c, &deg)) in components.iter().zip(degrees.iter()).enumerate() {
        if deg == 0 {
            return Verdict::no(
                Evidence::ZeroDegreeComponent {
                    index,
                    name: c.name.clone(),
                },
                Vec::new(),
            );
        }
    }
    Verdict::yes(
        Evidence::ComponentDegrees {
            degrees: components
                .iter()
                .zip(degrees.iter())
                .map(|(c, &d)| (c.name.clone(), d))
                .collect(),
        },
        Vec::new(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Status;

    fn model(degrees: &[(&str, i64)]) -> CurveModel {
        CurveModel::new(
            degrees
                .iter()
                .map(|(n, d)| CurveComponent {
                    name: String::from(*n),
                    degree: *d,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn opposite_degrees_on_two_lines_generate() {
        let m = model(&[("A", 1), ("B", -1)]);
        assert_eq!(m.tensor_ample().status, Status::Yes);
    }

    #[test]
    fn degree_zero_fails_with_witness() {
        let m = model(&[("C", 0)]);
        let v = m.tensor_ample();
        assert_eq!(v.status, Status::No);
        assert_eq!(
            v.evidence,
            Evidence::ZeroDegreeComponent {
                index: 0,
                name: String::from("C")
            }
        );
    }

    #[test]
    fn all_nonzero_generates() {
        let m = model(&[("A", 2), ("B", 3), ("C", -5)]);
        assert_eq!(m.tensor_ample().status, Status::Yes);
    }

    #[test]
    fn explicit_degrees_with_arity_check() {
        let m = model(&[("A", 1), ("B", -1)]);
        assert_eq!(
            curve_tensor_ample(&m, &[2, -2]).unwrap().status,
            Status::Yes
        );
        assert_eq!(
            curve_tensor_ample(&m, &[1, 0]).unwrap().status,
            Status::No
        );
        assert!(curve_tensor_ample(&m, &[1]).is_err());
    }

    #[test]
    fn empty_model_rejected() {
        assert_eq!(CurveModel::new(Vec::new()), Err(BuildError::EmptyCurveModel));
    }

    #[test]
    fn degree_scaling_invariance() {
        let m = model(&[("A", 1), ("B", -2), ("C", 7)]);
        let base = m.tensor_ample().status;
        for scale in 1i64..=5 {
            let scaled: Vec<i64> = m.components().iter().map(|c| c.degree * scale).collect();
            assert_eq!(curve_tensor_ample(&m, &scaled).unwrap().status, base);
        }
    }
}
