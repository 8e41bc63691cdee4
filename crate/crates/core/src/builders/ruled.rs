//! Geometrically ruled surfaces over a curve of genus g: the projectivized
//! rank-2 bundle of degree e, with the unstable case carrying a section of
//! negative self-intersection coming from a destabilizing quotient of
//! degree d < e/2.
//!
//! The lattice basis is `(f, xi)` — fiber class, tautological class — with
//! `f^2 = 0`, `f·xi = 1`, `xi^2 = e`. The canonical class is
//! `-2 xi + (2g - 2 + e) f`; the negative section is `C0 = xi + (d - e) f`
//! with `C0^2 = 2d - e`.

use alloc::format;
use alloc::string::String;
use alloc::vec;

use crate::exact::RatMat;
use crate::surface::{
    CurveEntry, DivisorClass, IntersectionLattice, Status, SurfaceModel, SurfaceModelData,
};

use super::BuildError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    /// A destabilizing quotient line bundle of the stated degree exists
    /// (strictly below half the bundle degree).
    Unstable { quotient_degree: i64 },
    Semistable,
}

/// Parameters of a ruled surface: base genus, bundle degree, stability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuledData {
    pub genus: u32,
    pub bundle_degree: i64,
    pub stability: Stability,
}

impl RuledData {
    pub fn unstable(genus: u32, bundle_degree: i64, quotient_degree: i64) -> Result<Self, BuildError> {
        let rd = RuledData {
            genus,
            bundle_degree,
            stability: Stability::Unstable { quotient_degree },
        };
        rd.validate()?;
        Ok(rd)
    }

    pub fn semistable(genus: u32, bundle_degree: i64) -> Self {
        RuledData {
            genus,
            bundle_degree,
            stability: Stability::Semistable,
        }
    }

    pub fn validate(&self) -> Result<(), BuildError> {
        if let Stability::Unstable { quotient_degree } = self.stability {
            if 2 * quotient_degree >= self.bundle_degree {
                return Err(BuildError::InvalidRuledData {
                    reason: format!(
                        "destabilizing quotient degree {quotient_degree} must satisfy 2d < e = {}",
                        self.bundle_degree
                    ),
                });
            }
        }
        Ok(())
    }
}

/// Builds the rank-2 model in the `(f, xi)` basis with full cone data.
pub fn build_ruled(rd: &RuledData) -> Result<SurfaceModel, BuildError> {
    rd.validate()?;
    let e = rd.bundle_degree;
    let g = i64::from(rd.genus);
    let gram = RatMat::from_int_rows(&[&[0, 1], &[1, e]]);
    let lattice =
        IntersectionLattice::with_hodge_check(gram, vec![String::from("f"), String::from("xi")])?;
    let canonical = DivisorClass::from_ints(&[2 * g - 2 + e, -2]);
    let fiber = CurveEntry::new(String::from("f"), DivisorClass::from_ints(&[1, 0]))?;

    let data = match rd.stability {
        Stability::Unstable { quotient_degree: d } => {
            let section = CurveEntry::new(
                String::from("C0"),
                DivisorClass::from_ints(&[d - e, 1]),
            )?;
            SurfaceModelData {
                lattice,
                canonical,
                pseff_gens: Some(vec![
                    section.class().clone(),
                    fiber.class().clone(),
                ]),
                nef_gens: Some(vec![
                    DivisorClass::from_ints(&[-d, 1]),
                    fiber.class().clone(),
                ]),
                curves: vec![fiber, section],
                neg_curves_complete: true,
                curve_cone_generated: true,
                proper_positive_dim: true,
                ample_witness: None,
            }
        }
        Stability::Semistable => {
            // generators doubled to stay integral: 2 xi - e f spans the
            // boundary ray xi - (e/2) f
            let boundary = DivisorClass::from_ints(&[-e, 2]);
            SurfaceModelData {
                lattice,
                canonical,
                pseff_gens: Some(vec![boundary.clone(), fiber.class().clone()]),
                nef_gens: Some(vec![boundary, fiber.class().clone()]),
                curves: vec![fiber],
                neg_curves_complete: true,
                // the catalog alone ({f}) does not span the curve cone
                curve_cone_generated: false,
                proper_positive_dim: true,
                ample_witness: None,
            }
        }
    };
    Ok(SurfaceModel::new(data)?)
}

/// Classification labels for the anticanonical class of a ruled surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnticanonicalClass {
    Ample,
    BigNotTensorAmple,
    TensorAmpleNotAmple,
    PseffNotBig,
    NotPseudoEffective,
}

impl AnticanonicalClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            AnticanonicalClass::Ample => "ample",
            AnticanonicalClass::BigNotTensorAmple => "big, not tensor-ample",
            AnticanonicalClass::TensorAmpleNotAmple => "tensor-ample, not ample",
            AnticanonicalClass::PseffNotBig => "pseudo-effective, not big",
            AnticanonicalClass::NotPseudoEffective => "not pseudo-effective",
        }
    }
}

/// Runs the surface classifiers on the anticanonical class. Ruled models
/// carry full cone data, so every verdict resolves.
pub fn ruled_anticanonical_class(rd: &RuledData) -> Result<AnticanonicalClass, BuildError> {
    let model = build_ruled(rd)?;
    let anti_k = model.canonical().neg();
    let decisive = |status: Status| -> bool { status != Status::Unknown };

    let pseff = model.is_pseff(&anti_k)?;
    debug_assert!(decisive(pseff.status));
    if pseff.status == Status::No {
        return Ok(AnticanonicalClass::NotPseudoEffective);
    }
    let big = model.is_big(&anti_k)?;
    debug_assert!(decisive(big.status));
    if big.status == Status::No {
        return Ok(AnticanonicalClass::PseffNotBig);
    }
    let tensor = model.is_tensor_ample(&anti_k)?;
    debug_assert!(decisive(tensor.status));
    if tensor.status == Status::No {
        return Ok(AnticanonicalClass::BigNotTensorAmple);
    }
    let ample = model.is_ample(&anti_k)?;
    debug_assert!(decisive(ample.status));
    Ok(if ample.status == Status::Yes {
        AnticanonicalClass::Ample
    } else {
        AnticanonicalClass::TensorAmpleNotAmple
    })
}
