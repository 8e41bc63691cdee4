//! Blow-ups of the projective plane in r distinct points, in the basis
//! `(H, E1, ..., Er)` with Gram `diag(1, -1, ..., -1)` and canonical class
//! `-3H + sum(Ei)`. The catalog always lists the exceptional curves; the
//! collinear configuration adds the strict transform of the line
//! (`H - sum(Ei)`), the co-conic configuration that of the conic
//! (`2H - sum(Ei)`).
//!
//! Negative-curve completeness is an assumption about the point
//! configuration that the lattice alone cannot certify, so it defaults to
//! off and is recorded explicitly when a caller overrides it.
//!
//! Also here: the exact integer arithmetic attached to these surfaces —
//! the `qH - sum(Ei)` pairing shortcut, the square-comparison form of the
//! Nagata exclusion, and the anticanonical degree obstruction.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exact::{Rat, RatMat, RatVec};
use crate::surface::{
    CurveEntry, DivisorClass, IntersectionLattice, SurfaceModel, SurfaceModelData, Verdict,
};

use super::BuildError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointConfig {
    General,
    OnLine,
    OnConic,
}

/// Parameters for a blow-up of the plane in `points` distinct points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlowupP2Config {
    pub points: u32,
    pub config: PointConfig,
    /// Assert (or deny) that the catalog lists every negative curve. The
    /// default is `false`: the lattice cannot certify it.
    pub neg_complete_override: Option<bool>,
}

impl BlowupP2Config {
    pub fn new(points: u32, config: PointConfig) -> Result<Self, BuildError> {
        if points == 0 {
            return Err(BuildError::NonPositiveParameter { name: "points" });
        }
        Ok(BlowupP2Config {
            points,
            config,
            neg_complete_override: None,
        })
    }

    pub fn with_neg_complete(mut self, value: bool) -> Self {
        self.neg_complete_override = Some(value);
        self
    }
}

/// Builds the rank `r+1` model.
pub fn build_blowup_p2(cfg: &BlowupP2Config) -> Result<SurfaceModel, BuildError> {
    let r = cfg.points as usize;
    if r == 0 {
        return Err(BuildError::NonPositiveParameter { name: "points" });
    }
    let rank = r + 1;
    let mut gram = RatMat::zeros(rank, rank);
    *gram.get_mut(0, 0) = Rat::one();
    for i in 1..rank {
        *gram.get_mut(i, i) = Rat::from_int(-1);
    }
    let mut names = vec![String::from("H")];
    names.extend((1..=r).map(|i| format!("E{i}")));
    let lattice = IntersectionLattice::with_hodge_check(gram, names)?;

    let mut canonical_coeffs = vec![Rat::from_int(-3)];
    canonical_coeffs.extend(core::iter::repeat_n(Rat::one(), r));
    let canonical = DivisorClass::new(canonical_coeffs.into_iter().collect());

    let mut curves: Vec<CurveEntry> = (1..=r)
        .map(|i| {
            CurveEntry::new(
                format!("E{i}"),
                DivisorClass::new(RatVec::unit(rank, i)),
            )
        })
        .collect::<Result<_, _>>()?;
    match cfg.config {
        PointConfig::General => {}
        PointConfig::OnLine => {
            let mut c = vec![1i64];
            c.extend(core::iter::repeat_n(-1, r));
            curves.push(CurveEntry::new(
                String::from("l~"),
                DivisorClass::from_ints(&c),
            )?);
        }
        PointConfig::OnConic => {
            let mut c = vec![2i64];
            c.extend(core::iter::repeat_n(-1, r));
            curves.push(CurveEntry::new(
                String::from("C~"),
                DivisorClass::from_ints(&c),
            )?);
        }
    }

    // (r+1)H - sum(Ei) pairs positively with every integral curve on any
    // blow-up of the plane in r distinct points; declare it when the
    // catalog self-checks agree
    let mut witness_coeffs = vec![Rat::from_int(cfg.points as i64 + 1)];
    witness_coeffs.extend(core::iter::repeat_n(Rat::from_int(-1), r));
    let witness = DivisorClass::new(witness_coeffs.into_iter().collect());
    let witness_ok = lattice.pair(&witness, &witness)?.is_positive()
        && curves
            .iter()
            .all(|c| {
                lattice
                    .pair(&witness, c.class())
                    .map(|p| p.is_positive())
                    .unwrap_or(false)
            });

    let data = SurfaceModelData {
        lattice,
        canonical,
        curves,
        neg_curves_complete: cfg.neg_complete_override.unwrap_or(false),
        curve_cone_generated: false,
        proper_positive_dim: true,
        ample_witness: witness_ok.then_some(witness),
        pseff_gens: None,
        nef_gens: None,
    };
    Ok(SurfaceModel::new(data)?)
}

/// The class `qH - sum(Ei)` in the blow-up basis.
pub fn dq_class(points: u32, q: &Rat) -> DivisorClass {
    let mut coeffs = vec![q.clone()];
    coeffs.extend(core::iter::repeat_n(Rat::from_int(-1), points as usize));
    DivisorClass::new(coeffs.into_iter().collect())
}

/// Closed-form pairing `(qH - sum Ei) · (d'H - sum m'_i Ei) = q d' - sum
/// m'_i`; must agree with the lattice pairing on the built model.
pub fn dq_pair(points: u32, q: &Rat, degree: &Rat, mults: &[Rat]) -> Result<Rat, BuildError> {
    if mults.len() != points as usize {
        return Err(BuildError::ArityMismatch {
            expected: points as usize,
            got: mults.len(),
        });
    }
    let sum: Rat = mults.iter().sum();
    Ok(q * degree - sum)
}

/// Exact integer form of the exclusion `sqrt(r) <= (1/d) sum(m_i)`:
/// true iff `r d^2 <= (sum m_i)^2`. No radicals are evaluated.
pub fn nagata_excluded(points: u32, degree: u32, mults: &[u32]) -> Result<bool, BuildError> {
    if points == 0 {
        return Err(BuildError::NonPositiveParameter { name: "points" });
    }
    if degree == 0 {
        return Err(BuildError::NonPositiveParameter { name: "degree" });
    }
    if mults.len() != points as usize {
        return Err(BuildError::ArityMismatch {
            expected: points as usize,
            got: mults.len(),
        });
    }
    let r = BigInt::from(points);
    let d = BigInt::from(degree);
    let sum: BigInt = mults.iter().map(|&m| BigInt::from(m)).sum();
    Ok(r * &d * &d <= &sum * &sum)
}

/// True iff `sum(a_i) = 3d`: a curve of degree d through the points with
/// these multiplicities pairs to zero with the canonical class, defeating
/// tensor-ampleness.
pub fn anticanonical_obstruction(points: u32, degree: u32, mults: &[u32]) -> Result<bool, BuildError> {
    if mults.len() != points as usize {
        return Err(BuildError::ArityMismatch {
            expected: points as usize,
            got: mults.len(),
        });
    }
    let sum: u64 = mults.iter().map(|&m| u64::from(m)).sum();
    Ok(sum == 3 * u64::from(degree))
}

/// The three classifications of a twisted pullback bundle on a blow-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleCheck {
    pub tensor_ample: Verdict,
    pub ample: Verdict,
    pub anti_ample: Verdict,
}

/// Classifies `aH + sum(l_i Ei)` (an ample pullback twisted by the
/// exceptional divisors) on the general blow-up with the exceptional
/// catalog asserted complete. All inputs must be positive.
pub fn blowup_point_bundle_check(
    points: u32,
    ample_mult: u32,
    twists: &[u32],
) -> Result<BundleCheck, BuildError> {
    if ample_mult == 0 {
        return Err(BuildError::NonPositiveParameter { name: "ample_mult" });
    }
    if twists.len() != points as usize {
        return Err(BuildError::ArityMismatch {
            expected: points as usize,
            got: twists.len(),
        });
    }
    if twists.contains(&0) {
        return Err(BuildError::NonPositiveParameter { name: "twists" });
    }
    let cfg = BlowupP2Config::new(points, PointConfig::General)?.with_neg_complete(true);
    let model = build_blowup_p2(&cfg)?;
    let mut coeffs = vec![Rat::from_int(i64::from(ample_mult))];
    coeffs.extend(twists.iter().map(|&l| Rat::from_int(i64::from(l))));
    let class = DivisorClass::new(coeffs.into_iter().collect());
    Ok(BundleCheck {
        tensor_ample: model.is_tensor_ample(&class)?,
        ample: model.is_ample(&class)?,
        anti_ample: model.is_ample(&class.neg())?,
    })
}
