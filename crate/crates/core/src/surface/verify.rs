//! Pure re-checking of verdict evidence. The verifier recomputes every
//! number appearing in a certificate from the model and query, confirms the
//! claimed sign conditions, and confirms the justification rules match what
//! the verdict's assumption list says it relied on. `Unknown` verdicts make
//! no claim and verify trivially.

use alloc::vec::Vec;

use crate::exact::{Rat, RatVec};

use super::{
    Assumption, ConeKind, DivisorClass, Evidence, Property, Status, SurfaceModel, Verdict,
};

fn pairings_match(model: &SurfaceModel, d: &DivisorClass, recorded: &[(alloc::string::String, Rat)]) -> bool {
    let actual = model.curve_pairings(d);
    actual == recorded
}

fn negative_pairings_match(
    model: &SurfaceModel,
    d: &DivisorClass,
    recorded: &[(alloc::string::String, Rat)],
) -> bool {
    let actual: Vec<(alloc::string::String, Rat)> = model
        .negative_curves()
        .iter()
        .map(|c| {
            (
                alloc::string::String::from(c.name()),
                model.lattice().pair_unchecked(d, c.class()),
            )
        })
        .collect();
    actual == recorded
}

fn catalog_pairing(model: &SurfaceModel, name: &str, d: &DivisorClass) -> Option<Rat> {
    model
        .curves()
        .iter()
        .find(|c| c.name() == name)
        .map(|c| model.lattice().pair_unchecked(d, c.class()))
}

fn combine(model: &SurfaceModel, gens: &[DivisorClass], coeffs: &[Rat]) -> Option<DivisorClass> {
    if gens.len() != coeffs.len() {
        return None;
    }
    let mut acc = DivisorClass::zero(model.rank());
    for (g, c) in gens.iter().zip(coeffs.iter()) {
        acc = acc.add(&g.scaled(c));
    }
    Some(acc)
}

/// Checks a big-side verdict for the class `d` (callers pass `-d` for the
/// anti-big side).
fn verify_big(model: &SurfaceModel, d: &DivisorClass, v: &Verdict) -> bool {
    match (&v.status, &v.evidence) {
        (Status::Unknown, Evidence::Inconclusive { .. }) => true,
        (Status::No, Evidence::ZeroClass) => d.is_zero(),
        (Status::Yes, Evidence::InteriorFacetValues { values }) => {
            let Some(cone) = model.pseff_cone() else {
                return false;
            };
            if !cone.is_full_dimensional() {
                return false;
            }
            let Ok(facets) = cone.facet_normals() else {
                return false;
            };
            if facets.len() != values.len() {
                return false;
            }
            facets
                .iter()
                .zip(values.iter())
                .all(|(f, recorded)| &f.dot(d.coeffs()) == recorded && recorded.is_positive())
        }
        (Status::No, Evidence::BoundaryFunctional { functional }) => {
            let Some(gens) = model.pseff_gens() else {
                return false;
            };
            !functional.is_zero()
                && gens
                    .iter()
                    .all(|g| !functional.dot(g.coeffs()).is_negative())
                && !functional.dot(d.coeffs()).is_positive()
        }
        (
            Status::Yes,
            Evidence::Decomposition {
                positive,
                negative_part,
                positive_self_int,
            },
        ) => {
            // exact reassembly over the catalog
            let mut acc = positive.clone();
            for (name, coeff) in negative_part {
                if coeff.is_negative() {
                    return false;
                }
                let Some(curve) = model.curves().iter().find(|c| c.name() == name) else {
                    return false;
                };
                acc = acc.add(&curve.class().scaled(coeff));
            }
            if &acc != d {
                return false;
            }
            // catalog-nonnegative positive part of positive square
            if model
                .curves()
                .iter()
                .any(|c| model.lattice().pair_unchecked(positive, c.class()).is_negative())
            {
                return false;
            }
            let p2 = model.lattice().pair_unchecked(positive, positive);
            if &p2 != positive_self_int || !p2.is_positive() {
                return false;
            }
            // justification: nef via the curve-cone flag, or a positive
            // pairing with the declared ample witness
            if v.assumptions.contains(&Assumption::CurveConeGenerated) {
                model.curve_cone_generated()
            } else {
                match model.ample_witness() {
                    Some(a) => model.lattice().pair_unchecked(positive, a).is_positive(),
                    None => false,
                }
            }
        }
        (
            Status::Yes,
            Evidence::SignaturePairing {
                self_int,
                witness_pairing,
            },
        ) => {
            let Some(a) = model.ample_witness() else {
                return false;
            };
            &model.lattice().pair_unchecked(d, d) == self_int
                && &model.lattice().pair_unchecked(d, a) == witness_pairing
                && self_int.is_positive()
                && witness_pairing.is_positive()
        }
        (Status::No, Evidence::WitnessObstruction { witness_pairing }) => {
            let Some(a) = model.ample_witness() else {
                return false;
            };
            &model.lattice().pair_unchecked(d, a) == witness_pairing
                && !witness_pairing.is_positive()
        }
        _ => false,
    }
}

/// Re-checks the evidence of a classification verdict by pure recomputation.
pub fn verify_verdict(
    model: &SurfaceModel,
    property: Property,
    d: &DivisorClass,
    v: &Verdict,
) -> bool {
    if d.dim() != model.rank() {
        return false;
    }
    if v.status == Status::Unknown {
        return matches!(v.evidence, Evidence::Inconclusive { .. });
    }
    match property {
        Property::Big => verify_big(model, d, v),
        Property::AntiBig => verify_big(model, &d.neg(), v),
        Property::Nef => match (&v.status, &v.evidence) {
            (Status::No, Evidence::CurveWitness { name, pairing }) => {
                catalog_pairing(model, name, d)
                    .map(|p| &p == pairing && p.is_negative())
                    .unwrap_or(false)
            }
            (Status::Yes, Evidence::ConeCoefficients { cone: ConeKind::Nef, coefficients }) => {
                let Some(gens) = model.nef_gens() else {
                    return false;
                };
                if coefficients.iter().any(Rat::is_negative) {
                    return false;
                }
                combine(model, gens, coefficients).map(|acc| &acc == d) == Some(true)
            }
            (
                Status::No,
                Evidence::SeparatingFunctional {
                    cone: ConeKind::Nef,
                    functional,
                },
            ) => {
                let Some(gens) = model.nef_gens() else {
                    return false;
                };
                !functional.is_zero()
                    && gens
                        .iter()
                        .all(|g| !functional.dot(g.coeffs()).is_negative())
                    && functional.dot(d.coeffs()).is_negative()
            }
            (Status::Yes, Evidence::CatalogPairings { pairings }) => {
                model.curve_cone_generated()
                    && pairings_match(model, d, pairings)
                    && pairings.iter().all(|(_, p)| !p.is_negative())
            }
            _ => false,
        },
        Property::Ample => match (&v.status, &v.evidence) {
            (Status::No, Evidence::CurveWitness { name, pairing }) => {
                catalog_pairing(model, name, d)
                    .map(|p| &p == pairing && !p.is_positive())
                    .unwrap_or(false)
            }
            (Status::No, Evidence::NotBig { big }) => {
                big.status == Status::No && verify_big(model, d, big)
            }
            (
                Status::Yes,
                Evidence::BigSideWithPairings {
                    anti_side: false,
                    big_side,
                    pairings,
                },
            ) => {
                model.neg_curves_complete()
                    && big_side.status == Status::Yes
                    && verify_big(model, d, big_side)
                    && pairings_match(model, d, pairings)
                    && pairings.iter().all(|(_, p)| p.is_positive())
            }
            _ => false,
        },
        Property::TensorAmple => match (&v.status, &v.evidence) {
            (Status::No, Evidence::CurveWitness { name, pairing }) => {
                catalog_pairing(model, name, d)
                    .map(|p| &p == pairing && p.is_zero())
                    .unwrap_or(false)
            }
            (Status::No, Evidence::NeitherBigNorAntiBig { big, anti_big }) => {
                big.status == Status::No
                    && anti_big.status == Status::No
                    && verify_big(model, d, big)
                    && verify_big(model, &d.neg(), anti_big)
            }
            (
                Status::Yes,
                Evidence::BigSideWithPairings {
                    anti_side,
                    big_side,
                    pairings,
                },
            ) => {
                let side_class = if *anti_side { d.neg() } else { d.clone() };
                model.neg_curves_complete()
                    && big_side.status == Status::Yes
                    && verify_big(model, &side_class, big_side)
                    && negative_pairings_match(model, d, pairings)
                    && pairings.iter().all(|(_, p)| !p.is_zero())
            }
            _ => false,
        },
    }
}

/// Re-checks a group-criterion verdict against the model and generators.
pub fn verify_group_verdict(model: &SurfaceModel, gens: &[DivisorClass], v: &Verdict) -> bool {
    if gens.iter().any(|g| g.dim() != model.rank()) {
        return false;
    }
    match (&v.status, &v.evidence) {
        (Status::Unknown, Evidence::Inconclusive { .. }) => true,
        (Status::No, Evidence::AllGeneratorsOrthogonal { name }) => {
            let Some(curve) = model.curves().iter().find(|c| c.name() == name) else {
                return false;
            };
            gens.iter()
                .all(|g| model.lattice().pair_unchecked(g, curve.class()).is_zero())
        }
        (Status::No, Evidence::SpanMissesBig) => {
            let Some(cone) = model.pseff_cone() else {
                return false;
            };
            let span: Vec<RatVec> = gens.iter().map(|g| g.coeffs().clone()).collect();
            matches!(cone.subspace_meets_interior(&span), Ok(false))
        }
        (Status::Yes, Evidence::AmpleGenerator { index }) => {
            let Some(g) = gens.get(*index) else {
                return false;
            };
            if Some(g) == model.ample_witness() {
                return true;
            }
            model
                .is_ample(g)
                .map(|a| a.status == Status::Yes)
                .unwrap_or(false)
        }
        (
            Status::Yes,
            Evidence::GroupCertificate {
                point,
                combination,
                curve_pairings,
            },
        ) => {
            if !model.neg_curves_complete() {
                return false;
            }
            let Some(cone) = model.pseff_cone() else {
                return false;
            };
            let Some(acc) = combine(model, gens, combination) else {
                return false;
            };
            if &acc != point {
                return false;
            }
            if !matches!(cone.interior_contains(point.coeffs()), Ok(true)) {
                return false;
            }
            // one nonvanishing generator pairing per negative curve
            let negatives = model.negative_curves();
            if negatives.len() != curve_pairings.len() {
                return false;
            }
            negatives
                .iter()
                .zip(curve_pairings.iter())
                .all(|(c, (name, gen_index, value))| {
                    c.name() == name
                        && gens
                            .get(*gen_index)
                            .map(|g| {
                                let p = model.lattice().pair_unchecked(g, c.class());
                                &p == value && !p.is_zero()
                            })
                            .unwrap_or(false)
                })
        }
        _ => false,
    }
}
