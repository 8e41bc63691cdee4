//! The core classifier layer: intersection lattices, divisor classes, curve
//! catalogs, and the verdict operations deciding nef / big / anti-big /
//! ample / tensor-ample with re-checkable certificates.
//!
//! Everything is computed on numerical classes over an exact rational
//! lattice. Verdicts are three-valued: a `No` is always sound on its own
//! (one bad curve or one obstruction suffices), while a `Yes` may rely on
//! the model's completeness flags and cone data; whatever it relied on is
//! recorded in the verdict's assumption list. The zero class on a proper
//! positive-dimensional model is by convention not big and not
//! tensor-ample.
//!
//! A model lists finitely many curves. Surfaces whose obstruction data is
//! not finitely presentable — a strictly nef class failing ampleness
//! against an infinite family, or a general blow-up in nine or more points
//! with its unknown negative curves — stay on the `Unknown` side unless
//! the caller supplies the missing catalog or cone data.

#[cfg(test)]
mod tests;

mod classify;
mod pieces;
mod verify;
mod zariski;

pub use pieces::{SignPiece, TensorAmplePieces};
pub use verify::{verify_group_verdict, verify_verdict};
pub use zariski::ZariskiDecomposition;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cone::{ConeError, ConeQ};
use crate::exact::{symmetric_signature, ExactError, Rat, RatMat, RatVec};

/// Errors from surface-model operations. Everything here is a usage or
/// model-validation error; classifiers themselves never fail on valid input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceError {
    DimMismatch { expected: usize, got: usize },
    Lattice(ExactError),
    /// The Hodge-index check was requested and the form is not of
    /// signature (1, rank-1).
    HodgeIndexFailed { plus: usize, minus: usize, zero: usize },
    BasisNamesMismatch { expected: usize, got: usize },
    ZeroCurveClass { name: String },
    /// A declared pseudo-effective cone does not contain a catalog curve.
    PseffMissingCurve { name: String },
    /// The declared ample witness failed its construction self-checks.
    AmpleWitnessRejected { reason: String },
    /// A declared nef generator pairs negatively with a catalog curve.
    NefGenRejected { index: usize, curve: String },
    Cone(ConeError),
    /// `zariski_decompose` requires the negative-curve catalog to be
    /// complete.
    RequiresNegCurvesComplete,
    /// Cone-piece enumeration requires model data that is absent.
    MissingConeData(&'static str),
    /// Sign-piece enumeration over this many negative curves is refused.
    TooManyNegativeCurves { count: usize },
}

impl fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceError::DimMismatch { expected, got } => {
                write!(f, "class dimension mismatch: expected {expected}, got {got}")
            }
            SurfaceError::Lattice(e) => write!(f, "invalid lattice: {e}"),
            SurfaceError::HodgeIndexFailed { plus, minus, zero } => write!(
                f,
                "intersection form has signature ({plus},{minus},{zero}), not (1,rank-1,0)"
            ),
            SurfaceError::BasisNamesMismatch { expected, got } => {
                write!(f, "expected {expected} basis names, got {got}")
            }
            SurfaceError::ZeroCurveClass { name } => {
                write!(f, "curve {name:?} has the zero class")
            }
            SurfaceError::PseffMissingCurve { name } => write!(
                f,
                "declared pseudo-effective cone does not contain catalog curve {name:?}"
            ),
            SurfaceError::AmpleWitnessRejected { reason } => {
                write!(f, "ample witness rejected: {reason}")
            }
            SurfaceError::NefGenRejected { index, curve } => write!(
                f,
                "declared nef generator {index} pairs negatively with curve {curve:?}"
            ),
            SurfaceError::Cone(e) => write!(f, "{e}"),
            SurfaceError::RequiresNegCurvesComplete => write!(
                f,
                "Zariski decomposition requires a complete negative-curve catalog"
            ),
            SurfaceError::MissingConeData(what) => {
                write!(f, "operation requires model data that is absent: {what}")
            }
            SurfaceError::TooManyNegativeCurves { count } => {
                write!(f, "piece enumeration over {count} negative curves is too large")
            }
        }
    }
}

impl From<ExactError> for SurfaceError {
    fn from(e: ExactError) -> Self {
        SurfaceError::Lattice(e)
    }
}

impl From<ConeError> for SurfaceError {
    fn from(e: ConeError) -> Self {
        SurfaceError::Cone(e)
    }
}

/// Rank + symmetric rational Gram matrix; houses the intersection product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    rank: usize,
    gram: RatMat,
    basis_names: Vec<String>,
    hodge_index: bool,
}

impl IntersectionLattice {
    /// Builds a lattice without the signature check (user models on exotic
    /// proper surfaces may fail it legitimately).
    pub fn new(gram: RatMat, basis_names: Vec<String>) -> Result<Self, SurfaceError> {
        Self::build(gram, basis_names, false)
    }

    /// Builds a lattice and verifies the intersection form has signature
    /// `(1, rank-1)` by exact characteristic-polynomial sign counting.
    pub fn with_hodge_check(gram: RatMat, basis_names: Vec<String>) -> Result<Self, SurfaceError> {
        Self::build(gram, basis_names, true)
    }

    fn build(gram: RatMat, basis_names: Vec<String>, hodge: bool) -> Result<Self, SurfaceError> {
        if !gram.is_square() {
            return Err(SurfaceError::Lattice(ExactError::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            }));
        }
        if !gram.is_symmetric() {
            return Err(SurfaceError::Lattice(ExactError::NotSymmetric));
        }
        let rank = gram.rows();
        if basis_names.len() != rank {
            return Err(SurfaceError::BasisNamesMismatch {
                expected: rank,
                got: basis_names.len(),
            });
        }
        if hodge {
            let (plus, minus, zero) = symmetric_signature(&gram)?;
            if plus != 1 || zero != 0 || minus + 1 != rank {
                return Err(SurfaceError::HodgeIndexFailed { plus, minus, zero });
            }
        }
        Ok(IntersectionLattice {
            rank,
            gram,
            basis_names,
            hodge_index: hodge,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn hodge_index_checked(&self) -> bool {
        self.hodge_index
    }

    /// The intersection product `D^t · gram · E`. Symmetric.
    pub fn pair(&self, d: &DivisorClass, e: &DivisorClass) -> Result<Rat, SurfaceError> {
        self.check_dim(d)?;
        self.check_dim(e)?;
        Ok(self.pair_unchecked(d, e))
    }

    pub(crate) fn pair_unchecked(&self, d: &DivisorClass, e: &DivisorClass) -> Rat {
        self.gram
            .mul_vec(e.coeffs())
            .expect("class dimension was validated")
            .dot(d.coeffs())
    }

    /// The functional `x -> c · x` as a coefficient vector (`gram * c`).
    pub fn pairing_functional(&self, c: &DivisorClass) -> Result<RatVec, SurfaceError> {
        self.check_dim(c)?;
        Ok(self
            .gram
            .mul_vec(c.coeffs())
            .expect("class dimension was validated"))
    }

    pub(crate) fn check_dim(&self, d: &DivisorClass) -> Result<(), SurfaceError> {
        if d.dim() != self.rank {
            return Err(SurfaceError::DimMismatch {
                expected: self.rank,
                got: d.dim(),
            });
        }
        Ok(())
    }
}

/// A numerical divisor class: exact rational coefficients in the basis of a
/// fixed lattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorClass(RatVec);

impl DivisorClass {
    pub fn new(coeffs: RatVec) -> Self {
        DivisorClass(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        DivisorClass(RatVec::from_ints(coeffs))
    }

    pub fn zero(dim: usize) -> Self {
        DivisorClass(RatVec::zeros(dim))
    }

    pub fn coeffs(&self) -> &RatVec {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scaled(&self, factor: &Rat) -> DivisorClass {
        DivisorClass(self.0.scaled(factor))
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass(&self.0 - &other.0)
    }

    pub fn neg(&self) -> DivisorClass {
        DivisorClass(-&self.0)
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A named integral curve with its (nonzero) numerical class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveEntry {
    name: String,
    class: DivisorClass,
}

impl CurveEntry {
    pub fn new(name: String, class: DivisorClass) -> Result<Self, SurfaceError> {
        if class.is_zero() {
            return Err(SurfaceError::ZeroCurveClass { name });
        }
        Ok(CurveEntry { name, class })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn class(&self) -> &DivisorClass {
        &self.class
    }
}

/// Three-valued classification status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Yes => write!(f, "yes"),
            Status::No => write!(f, "no"),
            Status::Unknown => write!(f, "unknown"),
        }
    }
}

/// Properties decidable for a divisor class on a surface model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Nef,
    Ample,
    Big,
    AntiBig,
    TensorAmple,
}

impl Property {
    pub fn as_str(&self) -> &'static str {
        match self {
            Property::Nef => "nef",
            Property::Ample => "ample",
            Property::Big => "big",
            Property::AntiBig => "antibig",
            Property::TensorAmple => "tensample",
        }
    }

    pub fn parse(s: &str) -> Option<Property> {
        match s {
            "nef" => Some(Property::Nef),
            "ample" => Some(Property::Ample),
            "big" => Some(Property::Big),
            "antibig" => Some(Property::AntiBig),
            "tensample" => Some(Property::TensorAmple),
            _ => None,
        }
    }
}

/// Model data a `Yes` (or cone-data-dependent `No`) verdict relied upon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Assumption {
    /// Every curve of negative self-intersection is in the catalog.
    NegCurvesComplete,
    /// The catalog generates the closure of the effective-curve cone.
    CurveConeGenerated,
    /// The declared pseudo-effective cone generators are correct.
    PseffGens,
    /// The declared nef cone generators are correct.
    NefGens,
    /// The declared ample witness is genuinely ample.
    AmpleWitness,
    /// Quasi-affineness assertions in a stratification certificate are
    /// user-supplied facts.
    QuasiAffineAssertions,
    /// The terminal verdict of a stratification certificate is a
    /// user-supplied fact.
    TerminalVerdict,
}

impl Assumption {
    pub fn as_str(&self) -> &'static str {
        match self {
            Assumption::NegCurvesComplete => "neg_curves_complete",
            Assumption::CurveConeGenerated => "curve_cone_generated",
            Assumption::PseffGens => "pseff_gens",
            Assumption::NefGens => "nef_gens",
            Assumption::AmpleWitness => "ample_witness",
            Assumption::QuasiAffineAssertions => "quasi_affine_assertions",
            Assumption::TerminalVerdict => "terminal_verdict",
        }
    }
}

/// Which declared model cone a certificate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeKind {
    Pseff,
    Nef,
}

/// Re-checkable evidence attached to a verdict. `Yes` verdicts carry a
/// certificate, `No` verdicts a witness, `Unknown` a reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Pairings of the class against every catalog curve, in catalog order.
    CatalogPairings { pairings: Vec<(String, Rat)> },
    /// Nonnegative coefficients expressing the class over a declared cone's
    /// generators.
    ConeCoefficients {
        cone: ConeKind,
        coefficients: Vec<Rat>,
    },
    /// Functional nonnegative on a declared cone's generators and negative
    /// on the class.
    SeparatingFunctional { cone: ConeKind, functional: RatVec },
    /// Strictly positive values of the pseudo-effective facet normals on
    /// the class: the class is interior, hence big.
    InteriorFacetValues { values: Vec<Rat> },
    /// Functional nonnegative on the pseudo-effective generators and
    /// nonpositive on the class: the class is not interior, hence not big.
    BoundaryFunctional { functional: RatVec },
    /// `class = positive + sum coeff * curve` with `positive` pairing
    /// nonnegatively with the whole catalog and `positive^2 > 0`.
    Decomposition {
        positive: DivisorClass,
        negative_part: Vec<(String, Rat)>,
        positive_self_int: Rat,
    },
    /// Self-intersection and ample-witness pairing; signs decide bigness.
    SignaturePairing { self_int: Rat, witness_pairing: Rat },
    /// Nonpositive pairing with the declared ample witness: not big.
    WitnessObstruction { witness_pairing: Rat },
    /// The zero class on a proper positive-dimensional model.
    ZeroClass,
    /// Ample fails because bigness failed.
    NotBig { big: Box<Verdict> },
    /// Tensor-ample fails on the surface itself: neither side is big.
    NeitherBigNorAntiBig {
        big: Box<Verdict>,
        anti_big: Box<Verdict>,
    },
    /// A big (or anti-big) verdict plus the catalog pairings backing the
    /// positivity/nonvanishing claim.
    BigSideWithPairings {
        anti_side: bool,
        big_side: Box<Verdict>,
        pairings: Vec<(String, Rat)>,
    },
    /// A single catalog curve whose pairing contradicts the property.
    CurveWitness { name: String, pairing: Rat },
    /// Group criterion: the indexed generator is ample (declared or
    /// classified).
    AmpleGenerator { index: usize },
    /// Group criterion certificate: an interior point of the big cone in
    /// the span of the generators, plus one nonvanishing pairing per
    /// negative catalog curve (curve name, generator index, value).
    GroupCertificate {
        point: DivisorClass,
        combination: Vec<Rat>,
        curve_pairings: Vec<(String, usize, Rat)>,
    },
    /// Group criterion: every generator is orthogonal to this catalog curve.
    AllGeneratorsOrthogonal { name: String },
    /// Group criterion: the span provably misses the big cone.
    SpanMissesBig,
    /// Scheme composition: the indexed component fails.
    ComponentWitness {
        index: usize,
        name: String,
        inner: Box<Verdict>,
    },
    /// Curve model: line-bundle degrees per component, all nonzero.
    ComponentDegrees { degrees: Vec<(String, i64)> },
    /// Curve model: the indexed component has degree zero.
    ZeroDegreeComponent { index: usize, name: String },
    /// A line bundle on a point is trivially big.
    PointScheme,
    /// Scheme composition: per-component verdicts, all `Yes`.
    Components { verdicts: Vec<(String, Verdict)> },
    /// Stratification certificate: chain shape checked, status inherited
    /// from the user-supplied assertions and terminal verdict.
    StratChain { strata: usize },
    /// No claim made.
    Inconclusive { reason: String },
}

/// Three-valued result carrying a certificate or witness; re-checkable by
/// [`verify_verdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub evidence: Evidence,
    pub assumptions: Vec<Assumption>,
}

impl Verdict {
    pub fn yes(evidence: Evidence, assumptions: Vec<Assumption>) -> Self {
        Verdict {
            status: Status::Yes,
            evidence,
            assumptions: dedup_assumptions(assumptions),
        }
    }

    pub fn no(evidence: Evidence, assumptions: Vec<Assumption>) -> Self {
        Verdict {
            status: Status::No,
            evidence,
            assumptions: dedup_assumptions(assumptions),
        }
    }

    pub fn unknown(reason: &str) -> Self {
        Verdict {
            status: Status::Unknown,
            evidence: Evidence::Inconclusive {
                reason: String::from(reason),
            },
            assumptions: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::No
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }
}

pub(crate) fn dedup_assumptions(mut list: Vec<Assumption>) -> Vec<Assumption> {
    let mut out = Vec::new();
    for a in list.drain(..) {
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

/// Structured canonical-class report: bigness both ways, the (-2)-curve
/// list, and the tensor-ample verdict with its cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalReport {
    pub big: Verdict,
    pub anti_big: Verdict,
    pub minus_two_curves: Vec<String>,
    pub tensor_ample: Verdict,
    /// On the `Yes` path, result of the redundant check that no (-2)-curve
    /// is present; `None` otherwise.
    pub minus_two_free_cross_check: Option<bool>,
}

/// The unit of classification: lattice + curve catalog + canonical class +
/// completeness flags + optional cone data.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    lattice: IntersectionLattice,
    canonical: DivisorClass,
    curves: Vec<CurveEntry>,
    neg_curves_complete: bool,
    curve_cone_generated: bool,
    proper_positive_dim: bool,
    ample_witness: Option<DivisorClass>,
    pseff_gens: Option<Vec<DivisorClass>>,
    nef_gens: Option<Vec<DivisorClass>>,
    pseff_cone: Option<ConeQ>,
    nef_cone: Option<ConeQ>,
}

/// Plain construction data for [`SurfaceModel::new`].
#[derive(Clone, Debug)]
pub struct SurfaceModelData {
    pub lattice: IntersectionLattice,
    pub canonical: DivisorClass,
    pub curves: Vec<CurveEntry>,
    pub neg_curves_complete: bool,
    pub curve_cone_generated: bool,
    pub proper_positive_dim: bool,
    pub ample_witness: Option<DivisorClass>,
    pub pseff_gens: Option<Vec<DivisorClass>>,
    pub nef_gens: Option<Vec<DivisorClass>>,
}

impl SurfaceModel {
    /// Validates and freezes a model. Checks: dimensions; nonzero curve
    /// classes; every catalog curve lies in a declared pseudo-effective
    /// cone (exact membership); declared nef generators pair nonnegatively
    /// with the catalog; a declared ample witness passes its Nakai-style
    /// self-checks (positive pairing with every catalog curve, positive
    /// self-intersection, interior of a declared pseudo-effective cone when
    /// facet enumeration is available).
    pub fn new(data: SurfaceModelData) -> Result<Self, SurfaceError> {
        let lattice = data.lattice;
        lattice.check_dim(&data.canonical)?;
        for c in &data.curves {
            lattice.check_dim(c.class())?;
        }

        let rank = lattice.rank();
        let pseff_cone = match &data.pseff_gens {
            Some(gens) => {
                for g in gens {
                    lattice.check_dim(g)?;
                }
                Some(ConeQ::new(
                    rank,
                    gens.iter().map(|g| g.coeffs().clone()).collect(),
                )?)
            }
            None => None,
        };
        if let Some(cone) = &pseff_cone {
            for c in &data.curves {
                if !cone.contains(c.class().coeffs())?.is_inside() {
                    return Err(SurfaceError::PseffMissingCurve {
                        name: String::from(c.name()),
                    });
                }
            }
        }

        let nef_cone = match &data.nef_gens {
            Some(gens) => {
                for (index, g) in gens.iter().enumerate() {
                    lattice.check_dim(g)?;
                    for c in &data.curves {
                        if lattice.pair_unchecked(g, c.class()).is_negative() {
                            return Err(SurfaceError::NefGenRejected {
                                index,
                                curve: String::from(c.name()),
                            });
                        }
                    }
                }
                Some(ConeQ::new(
                    rank,
                    gens.iter().map(|g| g.coeffs().clone()).collect(),
                )?)
            }
            None => None,
        };

        if let Some(witness) = &data.ample_witness {
            lattice.check_dim(witness)?;
            for c in &data.curves {
                if !lattice.pair_unchecked(witness, c.class()).is_positive() {
                    return Err(SurfaceError::AmpleWitnessRejected {
                        reason: alloc::format!(
                            "nonpositive pairing with catalog curve {:?}",
                            c.name()
                        ),
                    });
                }
            }
            if !lattice.pair_unchecked(witness, witness).is_positive() {
                return Err(SurfaceError::AmpleWitnessRejected {
                    reason: String::from("nonpositive self-intersection"),
                });
            }
            if let Some(cone) = &pseff_cone {
                // skipped when facet enumeration is out of reach; the
                // pairing and self-intersection checks above still apply
                match cone.interior_contains(witness.coeffs()) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Err(SurfaceError::AmpleWitnessRejected {
                            reason: String::from(
                                "not interior to the declared pseudo-effective cone",
                            ),
                        })
                    }
                    Err(ConeError::DimensionCap { .. })
                    | Err(ConeError::EnumerationTooLarge { .. }) => {}
                    Err(e) => return Err(SurfaceError::Cone(e)),
                }
            }
        }

        Ok(SurfaceModel {
            lattice,
            canonical: data.canonical,
            curves: data.curves,
            neg_curves_complete: data.neg_curves_complete,
            curve_cone_generated: data.curve_cone_generated,
            proper_positive_dim: data.proper_positive_dim,
            ample_witness: data.ample_witness,
            pseff_gens: data.pseff_gens,
            nef_gens: data.nef_gens,
            pseff_cone,
            nef_cone,
        })
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn curves(&self) -> &[CurveEntry] {
        &self.curves
    }

    pub fn neg_curves_complete(&self) -> bool {
        self.neg_curves_complete
    }

    pub fn curve_cone_generated(&self) -> bool {
        self.curve_cone_generated
    }

    pub fn proper_positive_dim(&self) -> bool {
        self.proper_positive_dim
    }

    pub fn ample_witness(&self) -> Option<&DivisorClass> {
        self.ample_witness.as_ref()
    }

    pub fn pseff_gens(&self) -> Option<&[DivisorClass]> {
        self.pseff_gens.as_deref()
    }

    pub fn nef_gens(&self) -> Option<&[DivisorClass]> {
        self.nef_gens.as_deref()
    }

    pub(crate) fn pseff_cone(&self) -> Option<&ConeQ> {
        self.pseff_cone.as_ref()
    }

    pub(crate) fn nef_cone(&self) -> Option<&ConeQ> {
        self.nef_cone.as_ref()
    }

    /// Rebuilds the model with both completeness flags relaxed to false,
    /// for verdict-monotonicity checks.
    pub fn with_relaxed_flags(&self) -> SurfaceModel {
        let mut m = self.clone();
        m.neg_curves_complete = false;
        m.curve_cone_generated = false;
        m
    }

    pub fn pair(&self, d: &DivisorClass, e: &DivisorClass) -> Result<Rat, SurfaceError> {
        self.lattice.pair(d, e)
    }
}
