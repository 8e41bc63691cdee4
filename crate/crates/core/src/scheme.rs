//! Composition of verdicts across irreducible components, and validation of
//! stratification certificates for schemes that are not surface models
//! (reducible curves, blow-up complements, non-separated gluings).
//!
//! A bundle generates on a reducible scheme iff it generates on every
//! irreducible component, so composition is a three-valued conjunction with
//! the smallest failing index as witness. Quasi-affineness of section
//! complements is not decidable from numerical data: a stratification
//! certificate carries those assertions as user-supplied facts and the
//! validator only checks the chain shape, recording the reliance in the
//! verdict's assumption list. Smooth proper non-projective threefolds are
//! worked examples for this certificate form, not a modeled class of their
//! own.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::builders::CurveModel;
use crate::surface::{
    Assumption, DivisorClass, Evidence, Status, SurfaceError, SurfaceModel, Verdict,
};

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum SchemeComponent {
    /// A bundle on a point generates trivially.
    Point { name: String },
    /// A proper curve with the bundle's degrees on its components.
    Curve { name: String, model: CurveModel },
    /// A surface model with the bundle's numerical class.
    Surface {
        name: String,
        model: SurfaceModel,
        class: DivisorClass,
    },
}

impl SchemeComponent {
    pub fn name(&self) -> &str {
        match self {
            SchemeComponent::Point { name } => name,
            SchemeComponent::Curve { name, .. } => name,
            SchemeComponent::Surface { name, .. } => name,
        }
    }

    pub fn tensor_ample(&self) -> Result<Verdict, SurfaceError> {
        match self {
            SchemeComponent::Point { .. } => {
                Ok(Verdict::yes(Evidence::PointScheme, Vec::new()))
            }
            SchemeComponent::Curve { model, .. } => Ok(model.tensor_ample()),
            SchemeComponent::Surface { model, class, .. } => model.is_tensor_ample(class),
        }
    }
}

/// A scheme presented by its irreducible components.
#[derive(Clone, Debug)]
pub struct SchemeModel {
    components: Vec<SchemeComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeError {
    EmptyScheme,
    Surface(SurfaceError),
}

impl fmt::Display for SchemeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeError::EmptyScheme => write!(f, "a scheme model needs at least one component"),
            SchemeError::Surface(e) => write!(f, "{e}"),
        }
    }
}

impl From<SurfaceError> for SchemeError {
    fn from(e: SurfaceError) -> Self {
        SchemeError::Surface(e)
    }
}

impl SchemeModel {
    pub fn new(components: Vec<SchemeComponent>) -> Result<Self, SchemeError> {
        if components.is_empty() {
            return Err(SchemeError::EmptyScheme);
        }
        Ok(SchemeModel { components })
    }

    pub fn components(&self) -> &[SchemeComponent] {
        &self.components
    }

    /// Tensor-ample iff every component verdict is `Yes`; `No` with the
    /// smallest-index failing component as witness; `Unknown` when some
    /// component is undecided and none fails.
    pub fn tensor_ample(&self) -> Result<Verdict, SchemeError> {
        let mut verdicts = Vec::with_capacity(self.components.len());
        for c in &self.components {
            verdicts.push((String::from(c.name()), c.tensor_ample()?));
        }
        if let Some((index, (name, inner))) = verdicts
            .iter()
            .enumerate()
            .find(|(_, (_, v))| v.status == Status::No)
        {
            let assumptions = inner.assumptions.clone();
            return Ok(Verdict::no(
                Evidence::ComponentWitness {
                    index,
                    name: name.clone(),
                    inner: Box::new(inner.clone()),
                },
                assumptions,
            ));
        }
        if let Some((_, (name, _))) = verdicts
            .iter()
            .enumerate()
            .find(|(_, (_, v))| v.status == Status::Unknown)
        {
            return Ok(Verdict::unknown(&format!(
                "component {name:?} is undecided and no component fails"
            )));
        }
        let assumptions = verdicts
            .iter()
            .flat_map(|(_, v)| v.assumptions.iter().copied())
            .collect();
        Ok(Verdict::yes(
            Evidence::Components { verdicts },
            assumptions,
        ))
    }
}

/// Re-checks a scheme composition verdict by recomputing the component
/// verdicts.
pub fn verify_scheme_verdict(model: &SchemeModel, v: &Verdict) -> bool {
    match (&v.status, &v.evidence) {
        (Status::Unknown, Evidence::Inconclusive { .. }) => true,
        (Status::No, Evidence::ComponentWitness { index, name, inner }) => {
            let Some(component) = model.components().get(*index) else {
                return false;
            };
            component.name() == name
                && inner.status == Status::No
                && component
                    .tensor_ample()
                    .map(|actual| actual == **inner)
                    .unwrap_or(false)
        }
        (Status::Yes, Evidence::Components { verdicts }) => {
            verdicts.len() == model.components().len()
                && model
                    .components()
                    .iter()
                    .zip(verdicts.iter())
                    .all(|(c, (name, recorded))| {
                        c.name() == name
                            && recorded.status == Status::Yes
                            && c.tensor_ample()
                                .map(|actual| actual == *recorded)
                                .unwrap_or(false)
                    })
        }
        _ => false,
    }
}

/// One stratum of a stratification chain: the open part of the current
/// closed stratum is cut out by a section of the stated tensor power, and
/// the caller asserts that open part is quasi-affine (or has generating
/// structure sheaf).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub section_power: i64,
    pub open_locus_quasi_affine: bool,
}

/// A finite chain of strata ending in a terminal verdict for the last
/// closed piece. The quasi-affineness assertions and the terminal verdict
/// are user-supplied facts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratCertificate {
    pub strata: Vec<Stratum>,
    pub terminal: Status,
}

impl StratCertificate {
    /// `Yes` iff every stratum asserts a quasi-affine open locus and the
    /// terminal verdict is `Yes`. A terminal `No` propagates (restriction
    /// to a closed stratum preserves generation); anything else is
    /// `Unknown`.
    pub fn validate(&self) -> Verdict {
        if self.terminal == Status::No {
            return Verdict::no(
                Evidence::StratChain {
                    strata: self.strata.len(),
                },
                alloc::vec![Assumption::TerminalVerdict],
            );
        }
        if let Some(i) = self
            .strata
            .iter()
            .position(|s| !s.open_locus_quasi_affine)
        {
            return Verdict::unknown(&format!(
                "stratum {i} does not assert a quasi-affine open locus"
            ));
        }
        if self.terminal == Status::Unknown {
            return Verdict::unknown("terminal verdict is unknown");
        }
        Verdict::yes(
            Evidence::StratChain {
                strata: self.strata.len(),
            },
            alloc::vec![
                Assumption::QuasiAffineAssertions,
                Assumption::TerminalVerdict
            ],
        )
    }
}
