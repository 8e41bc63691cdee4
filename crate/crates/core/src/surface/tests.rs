use alloc::string::String;
use alloc::vec;

use crate::builders::{
    build_blowup_p2, build_ruled, build_toric, BlowupP2Config, PointConfig, RuledData, ToricCycle,
};
use crate::exact::{Rat, RatMat};

use super::*;

fn hirzebruch(n: i64) -> SurfaceModel {
    build_ruled(&RuledData::unstable(0, -n, -n).unwrap()).unwrap()
}

fn anti_canonical(m: &SurfaceModel) -> DivisorClass {
    m.canonical().neg()
}

fn check(m: &SurfaceModel, p: Property, d: &DivisorClass, v: &Verdict) {
    assert!(
        verify_verdict(m, p, d, v),
        "evidence fails verification for {p:?} of {d:?}: {v:?}"
    );
}

#[test]
fn pairing_arithmetic() {
    // blow-up lattice: (H+E1)^2 = 0
    let m = build_blowup_p2(&BlowupP2Config::new(1, PointConfig::General).unwrap()).unwrap();
    let d = DivisorClass::from_ints(&[1, 1]);
    assert_eq!(m.pair(&d, &d).unwrap(), Rat::zero());
    // ruled lattice with e = -2: xi^2 = -2
    let f2 = hirzebruch(2);
    let xi = DivisorClass::from_ints(&[0, 1]);
    assert_eq!(f2.pair(&xi, &xi).unwrap(), Rat::from_int(-2));
    // pairing with the zero class vanishes
    let zero = DivisorClass::zero(2);
    assert_eq!(f2.pair(&xi, &zero).unwrap(), Rat::zero());
    // dimension mismatch is a usage error
    assert!(f2.pair(&xi, &DivisorClass::from_ints(&[1])).is_err());
}

#[test]
fn genus_on_the_plane() {
    let m = build_toric(&ToricCycle::new(vec![1, 1, 1]).unwrap()).unwrap();
    let line = DivisorClass::from_ints(&[1]);
    assert_eq!(m.arithmetic_genus(&line).unwrap(), Rat::zero());
    assert!(!m.is_minus_two_curve(&line).unwrap());
}

#[test]
fn nef_examples() {
    // anticanonical on the first Hirzebruch surface is nef (in fact ample)
    let f1 = hirzebruch(1);
    let v = f1.is_nef(&anti_canonical(&f1)).unwrap();
    assert_eq!(v.status, Status::Yes);
    check(&f1, Property::Nef, &anti_canonical(&f1), &v);

    // on the third, the negative section pairs to -1
    let f3 = hirzebruch(3);
    let v = f3.is_nef(&anti_canonical(&f3)).unwrap();
    assert_eq!(v.status, Status::No);
    match &v.evidence {
        Evidence::CurveWitness { name, pairing } => {
            assert_eq!(name, "C0");
            assert_eq!(pairing, &Rat::from_int(-1));
        }
        other => panic!("expected curve witness, got {other:?}"),
    }
    check(&f3, Property::Nef, &anti_canonical(&f3), &v);

    // nonnegative pairings with no flag and no nef data stay undecided
    let blowup =
        build_blowup_p2(&BlowupP2Config::new(1, PointConfig::General).unwrap()).unwrap();
    let h = DivisorClass::from_ints(&[1, 0]);
    let v = blowup.is_nef(&h).unwrap();
    assert_eq!(v.status, Status::Unknown);
}

#[test]
fn big_examples() {
    // interior coefficients on the third Hirzebruch surface
    let f3 = hirzebruch(3);
    let anti_k = anti_canonical(&f3);
    assert_eq!(anti_k, DivisorClass::from_ints(&[5, 2]));
    let v = f3.is_big(&anti_k).unwrap();
    assert_eq!(v.status, Status::Yes);
    assert!(matches!(v.evidence, Evidence::InteriorFacetValues { .. }));
    check(&f3, Property::Big, &anti_k, &v);

    // pullback-plus-exceptional on the one-point blow-up, via decomposition
    let blowup = build_blowup_p2(
        &BlowupP2Config::new(1, PointConfig::General)
            .unwrap()
            .with_neg_complete(true),
    )
    .unwrap();
    let d = DivisorClass::from_ints(&[1, 1]);
    let v = blowup.is_big(&d).unwrap();
    assert_eq!(v.status, Status::Yes);
    match &v.evidence {
        Evidence::Decomposition {
            positive,
            negative_part,
            ..
        } => {
            assert_eq!(positive, &DivisorClass::from_ints(&[1, 0]));
            assert_eq!(negative_part, &vec![(String::from("E1"), Rat::one())]);
        }
        other => panic!("expected decomposition, got {other:?}"),
    }
    check(&blowup, Property::Big, &d, &v);

    // the zero class is not big on a proper model
    let v = blowup.is_big(&DivisorClass::zero(2)).unwrap();
    assert_eq!(v.status, Status::No);
    assert_eq!(v.evidence, Evidence::ZeroClass);
    check(&blowup, Property::Big, &DivisorClass::zero(2), &v);
}

#[test]
fn anti_big_examples() {
    // toric canonical is anti-big
    let p2 = build_toric(&ToricCycle::new(vec![1, 1, 1]).unwrap()).unwrap();
    let v = p2.is_anti_big(p2.canonical()).unwrap();
    assert_eq!(v.status, Status::Yes);
    check(&p2, Property::AntiBig, p2.canonical(), &v);

    // H + E1 is not anti-big: its inverse pairs negatively with the witness
    let blowup =
        build_blowup_p2(&BlowupP2Config::new(1, PointConfig::General).unwrap()).unwrap();
    let d = DivisorClass::from_ints(&[1, 1]);
    let v = blowup.is_anti_big(&d).unwrap();
    assert_eq!(v.status, Status::No);
    assert!(matches!(v.evidence, Evidence::WitnessObstruction { .. }));
    check(&blowup, Property::AntiBig, &d, &v);

    let vz = blowup.is_anti_big(&DivisorClass::zero(2)).unwrap();
    assert_eq!(vz.status, Status::No);
}

#[test]
fn ample_examples() {
    let f1 = hirzebruch(1);
    let v = f1.is_ample(&anti_canonical(&f1)).unwrap();
    assert_eq!(v.status, Status::Yes);
    check(&f1, Property::Ample, &anti_canonical(&f1), &v);

    // on the second, the (-2)-section pairs to zero
    let f2 = hirzebruch(2);
    let v = f2.is_ample(&anti_canonical(&f2)).unwrap();
    assert_eq!(v.status, Status::No);
    match &v.evidence {
        Evidence::CurveWitness { name, pairing } => {
            assert_eq!(name, "C0");
            assert!(pairing.is_zero());
        }
        other => panic!("expected curve witness, got {other:?}"),
    }
    check(&f2, Property::Ample, &anti_canonical(&f2), &v);

    // the anticanonical pairs negatively with the line transform: sound No
    // even without the completeness flag
    let blowup =
        build_blowup_p2(&BlowupP2Config::new(10, PointConfig::OnLine).unwrap()).unwrap();
    let v = blowup.is_ample(&anti_canonical(&blowup)).unwrap();
    assert_eq!(v.status, Status::No);
    check(&blowup, Property::Ample, &anti_canonical(&blowup), &v);

    // positive pairings but no completeness flag: undecided
    let general =
        build_blowup_p2(&BlowupP2Config::new(10, PointConfig::General).unwrap()).unwrap();
    let mut coeffs = vec![4i64];
    coeffs.extend(std::iter::repeat_n(-1, 10));
    let d = DivisorClass::from_ints(&coeffs);
    assert_eq!(general.is_big(&d).unwrap().status, Status::Yes);
    assert_eq!(general.is_ample(&d).unwrap().status, Status::Unknown);
}

#[test]
fn tensor_ample_trichotomy_on_hirzebruch() {
    let f1 = hirzebruch(1);
    let v1 = f1.is_tensor_ample(&anti_canonical(&f1)).unwrap();
    assert_eq!(v1.status, Status::Yes);
    check(&f1, Property::TensorAmple, &anti_canonical(&f1), &v1);

    let f2 = hirzebruch(2);
    let v2 = f2.is_tensor_ample(&anti_canonical(&f2)).unwrap();
    assert_eq!(v2.status, Status::No);
    check(&f2, Property::TensorAmple, &anti_canonical(&f2), &v2);

    let f3 = hirzebruch(3);
    let v3 = f3.is_tensor_ample(&anti_canonical(&f3)).unwrap();
    assert_eq!(v3.status, Status::Yes);
    check(&f3, Property::TensorAmple, &anti_canonical(&f3), &v3);
    let ample3 = f3.is_ample(&anti_canonical(&f3)).unwrap();
    assert_eq!(ample3.status, Status::No);
}

#[test]
fn tensor_ample_on_the_one_point_blowup() {
    let blowup = build_blowup_p2(
        &BlowupP2Config::new(1, PointConfig::General)
            .unwrap()
            .with_neg_complete(true),
    )
    .unwrap();
    let d = DivisorClass::from_ints(&[1, 1]);
    let ta = blowup.is_tensor_ample(&d).unwrap();
    assert_eq!(ta.status, Status::Yes);
    check(&blowup, Property::TensorAmple, &d, &ta);
    assert_eq!(blowup.is_ample(&d).unwrap().status, Status::No);
}

#[test]
fn tensor_ample_needs_the_completeness_flag() {
    let incomplete =
        build_blowup_p2(&BlowupP2Config::new(10, PointConfig::OnLine).unwrap()).unwrap();
    let v = incomplete
        .is_tensor_ample(&anti_canonical(&incomplete))
        .unwrap();
    assert_eq!(v.status, Status::Unknown);

    let complete = build_blowup_p2(
        &BlowupP2Config::new(10, PointConfig::OnLine)
            .unwrap()
            .with_neg_complete(true),
    )
    .unwrap();
    let v = complete
        .is_tensor_ample(&anti_canonical(&complete))
        .unwrap();
    assert_eq!(v.status, Status::Yes);
    check(
        &complete,
        Property::TensorAmple,
        &anti_canonical(&complete),
        &v,
    );
}

#[test]
fn zariski_hand_computed_decompositions() {
    // H + 2E1 on the one-point blow-up: P = H, N = 2E1
    let blowup = build_blowup_p2(
        &BlowupP2Config::new(1, PointConfig::General)
            .unwrap()
            .with_neg_complete(true),
    )
    .unwrap();
    let d = DivisorClass::from_ints(&[1, 2]);
    let z = blowup.zariski_decompose(&d).unwrap().unwrap();
    assert_eq!(z.positive, DivisorClass::from_ints(&[1, 0]));
    assert_eq!(z.negative, vec![(String::from("E1"), Rat::from_int(2))]);
    assert_eq!(z.total(&blowup), d);

    // C0 + f on the second Hirzebruch surface: P = xi/2 + f, N = C0/2
    let f2 = hirzebruch(2);
    let d = DivisorClass::from_ints(&[1, 1]);
    let z = f2.zariski_decompose(&d).unwrap().unwrap();
    assert_eq!(
        z.positive,
        DivisorClass::new(vec![Rat::one(), Rat::new(1, 2)].into_iter().collect())
    );
    assert_eq!(z.negative, vec![(String::from("C0"), Rat::new(1, 2))]);
    assert_eq!(
        f2.pair(&z.positive, &z.positive).unwrap(),
        Rat::new(1, 2)
    );

    // a nef class decomposes trivially
    let nef = DivisorClass::from_ints(&[3, 1]);
    let z = f2.zariski_decompose(&nef).unwrap().unwrap();
    assert_eq!(z.positive, nef);
    assert!(z.negative.is_empty());

    // the flag is a precondition
    let incomplete =
        build_blowup_p2(&BlowupP2Config::new(1, PointConfig::General).unwrap()).unwrap();
    assert_eq!(
        incomplete.zariski_decompose(&d),
        Err(SurfaceError::RequiresNegCurvesComplete)
    );
}

#[test]
fn cone_pieces_on_ruled_surfaces() {
    // unstable: the amples and the side with negative section pairing
    let f2 = hirzebruch(2);
    let pieces = f2.tensor_ample_cone_pieces().unwrap();
    assert_eq!(pieces.perps.len(), 1);
    assert_eq!(pieces.pieces.len(), 2);
    assert_eq!(pieces.pieces[0].signs, vec![(String::from("C0"), 1)]);
    assert_eq!(pieces.pieces[1].signs, vec![(String::from("C0"), -1)]);
    for piece in &pieces.pieces {
        // each witness realizes its own sign assignment, is big and
        // tensor-ample, and the all-positive piece is ample
        let w = &piece.witness;
        for (name, sign) in &piece.signs {
            let curve = f2.curves().iter().find(|c| c.name() == name).unwrap();
            let pairing = f2.pair(w, curve.class()).unwrap();
            assert_eq!(pairing.signum(), *sign, "witness sign for {name}");
        }
        assert_eq!(f2.is_big(w).unwrap().status, Status::Yes);
        assert_eq!(f2.is_tensor_ample(w).unwrap().status, Status::Yes);
        let all_positive = piece.signs.iter().all(|(_, s)| *s == 1);
        assert_eq!(
            f2.is_ample(w).unwrap().status,
            if all_positive { Status::Yes } else { Status::No }
        );
    }

    // no negative curves on the plane: a single piece
    let p2 = build_toric(&ToricCycle::new(vec![1, 1, 1]).unwrap()).unwrap();
    let pieces = p2.tensor_ample_cone_pieces().unwrap();
    assert_eq!(pieces.pieces.len(), 1);
    assert!(pieces.pieces[0].signs.is_empty());

    // missing cone data is a capacity error
    let blowup =
        build_blowup_p2(&BlowupP2Config::new(1, PointConfig::General).unwrap()).unwrap();
    assert!(matches!(
        blowup.tensor_ample_cone_pieces(),
        Err(SurfaceError::MissingConeData("pseff_gens"))
    ));
}

#[test]
fn group_criterion_examples() {
    let f2 = hirzebruch(2);
    let anti_k = anti_canonical(&f2);
    let fiber = DivisorClass::from_ints(&[1, 0]);

    let alone = f2.group_tensor_ample(std::slice::from_ref(&anti_k)).unwrap();
    assert_eq!(alone.status, Status::No);
    match &alone.evidence {
        Evidence::AllGeneratorsOrthogonal { name } => assert_eq!(name, "C0"),
        other => panic!("expected orthogonality witness, got {other:?}"),
    }
    assert!(verify_group_verdict(&f2, std::slice::from_ref(&anti_k), &alone));

    let pair = f2.group_tensor_ample(&[anti_k.clone(), fiber.clone()]).unwrap();
    assert_eq!(pair.status, Status::Yes);
    assert!(verify_group_verdict(&f2, &[anti_k, fiber], &pair));

    // the declared witness settles it on its own
    let blowup =
        build_blowup_p2(&BlowupP2Config::new(2, PointConfig::General).unwrap()).unwrap();
    let witness = blowup.ample_witness().unwrap().clone();
    let v = blowup.group_tensor_ample(std::slice::from_ref(&witness)).unwrap();
    assert_eq!(v.status, Status::Yes);
    assert_eq!(v.evidence, Evidence::AmpleGenerator { index: 0 });
    assert!(verify_group_verdict(&blowup, &[witness], &v));

    // a span inside the nef boundary misses the big cone
    let f2b = hirzebruch(2);
    let boundary = DivisorClass::from_ints(&[-2, 1]); // the C0-perp direction xi - d f
    let v = f2b.group_tensor_ample(std::slice::from_ref(&boundary)).unwrap();
    assert_eq!(v.status, Status::No);
    assert!(verify_group_verdict(&f2b, &[boundary], &v));
}

#[test]
fn canonical_report_cross_check() {
    let p2 = build_toric(&ToricCycle::new(vec![1, 1, 1]).unwrap()).unwrap();
    let report = p2.canonical_report().unwrap();
    assert_eq!(report.big.status, Status::No);
    assert_eq!(report.anti_big.status, Status::Yes);
    assert!(report.minus_two_curves.is_empty());
    assert_eq!(report.tensor_ample.status, Status::Yes);
    assert_eq!(report.minus_two_free_cross_check, Some(true));
}

#[test]
fn scaling_invariance_of_tensor_ample() {
    let models = [
        hirzebruch(1),
        hirzebruch(2),
        hirzebruch(3),
        build_toric(&ToricCycle::new(vec![0, -2, 0, 2]).unwrap()).unwrap(),
        build_blowup_p2(
            &BlowupP2Config::new(2, PointConfig::OnLine)
                .unwrap()
                .with_neg_complete(true),
        )
        .unwrap(),
    ];
    for m in &models {
        let classes = [
            m.canonical().clone(),
            anti_canonical(m),
            m.curves()[0].class().clone(),
        ];
        for d in &classes {
            let base = m.is_tensor_ample(d).unwrap().status;
            for n in [-3i64, -2, -1, 2, 3] {
                let scaled = d.scaled(&Rat::from_int(n));
                assert_eq!(
                    m.is_tensor_ample(&scaled).unwrap().status,
                    base,
                    "scaling by {n} changed the verdict for {d:?}"
                );
            }
        }
    }
}

#[test]
fn nef_and_tensor_ample_implies_ample() {
    let models = [hirzebruch(1), hirzebruch(2), hirzebruch(3)];
    let probes = [
        DivisorClass::from_ints(&[1, 0]),
        DivisorClass::from_ints(&[0, 1]),
        DivisorClass::from_ints(&[1, 1]),
        DivisorClass::from_ints(&[3, 1]),
        DivisorClass::from_ints(&[5, 2]),
        DivisorClass::from_ints(&[-1, 2]),
    ];
    for m in &models {
        for d in &probes {
            let nef = m.is_nef(d).unwrap().status;
            let ta = m.is_tensor_ample(d).unwrap().status;
            if nef == Status::Yes && ta == Status::Yes {
                assert_eq!(
                    m.is_ample(d).unwrap().status,
                    Status::Yes,
                    "nef + tensor-ample must be ample at {d:?}"
                );
            }
        }
    }
}

#[test]
fn no_verdicts_survive_flag_relaxation() {
    let models = [
        hirzebruch(1),
        hirzebruch(2),
        hirzebruch(3),
        build_blowup_p2(
            &BlowupP2Config::new(3, PointConfig::OnLine)
                .unwrap()
                .with_neg_complete(true),
        )
        .unwrap(),
    ];
    let props = [
        Property::Nef,
        Property::Ample,
        Property::Big,
        Property::AntiBig,
        Property::TensorAmple,
    ];
    for m in &models {
        let relaxed = m.with_relaxed_flags();
        let probes = [
            m.canonical().clone(),
            anti_canonical(m),
            m.curves()[0].class().clone(),
            DivisorClass::zero(m.rank()),
        ];
        for d in &probes {
            for p in props {
                let strict = m.classify(p, d).unwrap().status;
                let weak = relaxed.classify(p, d).unwrap().status;
                match strict {
                    Status::No => assert_ne!(weak, Status::Yes, "{p:?} {d:?}"),
                    Status::Yes => assert_ne!(weak, Status::No, "{p:?} {d:?}"),
                    Status::Unknown => {}
                }
            }
        }
    }
}

#[test]
fn big_implies_positive_pairing_with_nonnegative_catalog_curves() {
    let models = [
        hirzebruch(1),
        hirzebruch(2),
        hirzebruch(3),
        build_toric(&ToricCycle::new(vec![0, -2, 0, 2]).unwrap()).unwrap(),
    ];
    for m in &models {
        let probes = [
            anti_canonical(m),
            m.canonical().clone(),
            DivisorClass::from_ints(&[1, 1]),
            DivisorClass::from_ints(&[2, 1]),
        ];
        for d in &probes {
            if m.is_big(d).unwrap().status == Status::Yes {
                for c in m.curves() {
                    let c2 = m.pair(c.class(), c.class()).unwrap();
                    if !c2.is_negative() {
                        assert!(
                            m.pair(d, c.class()).unwrap().is_positive(),
                            "big class {d:?} must pair positively with {}",
                            c.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn tampered_evidence_is_rejected() {
    // decomposition with a perturbed positive part
    let blowup = build_blowup_p2(
        &BlowupP2Config::new(1, PointConfig::General)
            .unwrap()
            .with_neg_complete(true),
    )
    .unwrap();
    let d = DivisorClass::from_ints(&[1, 1]);
    let honest = blowup.is_big(&d).unwrap();
    assert!(verify_verdict(&blowup, Property::Big, &d, &honest));
    if let Evidence::Decomposition {
        negative_part,
        positive_self_int,
        ..
    } = &honest.evidence
    {
        let tampered = Verdict {
            status: honest.status,
            evidence: Evidence::Decomposition {
                positive: DivisorClass::from_ints(&[2, 0]),
                negative_part: negative_part.clone(),
                positive_self_int: positive_self_int.clone(),
            },
            assumptions: honest.assumptions.clone(),
        };
        assert!(!verify_verdict(&blowup, Property::Big, &d, &tampered));
    } else {
        panic!("expected a decomposition");
    }

    // curve witness with the wrong name or wrong value
    let f2 = hirzebruch(2);
    let anti = anti_canonical(&f2);
    let honest = f2.is_tensor_ample(&anti).unwrap();
    assert!(verify_verdict(&f2, Property::TensorAmple, &anti, &honest));
    let wrong_name = Verdict {
        status: Status::No,
        evidence: Evidence::CurveWitness {
            name: String::from("f"),
            pairing: Rat::zero(),
        },
        assumptions: vec![],
    };
    assert!(!verify_verdict(&f2, Property::TensorAmple, &anti, &wrong_name));
    let wrong_value = Verdict {
        status: Status::No,
        evidence: Evidence::CurveWitness {
            name: String::from("C0"),
            pairing: Rat::one(),
        },
        assumptions: vec![],
    };
    assert!(!verify_verdict(&f2, Property::TensorAmple, &anti, &wrong_value));

    // a yes verdict with a dropped pairing list entry
    let f3 = hirzebruch(3);
    let anti3 = anti_canonical(&f3);
    let honest = f3.is_tensor_ample(&anti3).unwrap();
    if let Evidence::BigSideWithPairings {
        anti_side,
        big_side,
        ..
    } = &honest.evidence
    {
        let tampered = Verdict {
            status: Status::Yes,
            evidence: Evidence::BigSideWithPairings {
                anti_side: *anti_side,
                big_side: big_side.clone(),
                pairings: vec![],
            },
            assumptions: honest.assumptions.clone(),
        };
        assert!(!verify_verdict(&f3, Property::TensorAmple, &anti3, &tampered));
    } else {
        panic!("expected a big side with pairings");
    }

    // group certificate with a mangled combination
    let f2 = hirzebruch(2);
    let gens = [anti_canonical(&f2), DivisorClass::from_ints(&[1, 0])];
    let honest = f2.group_tensor_ample(&gens).unwrap();
    assert!(verify_group_verdict(&f2, &gens, &honest));
    if let Evidence::GroupCertificate {
        point,
        curve_pairings,
        ..
    } = &honest.evidence
    {
        let tampered = Verdict {
            status: Status::Yes,
            evidence: Evidence::GroupCertificate {
                point: point.clone(),
                combination: vec![Rat::zero(), Rat::zero()],
                curve_pairings: curve_pairings.clone(),
            },
            assumptions: honest.assumptions.clone(),
        };
        assert!(!verify_group_verdict(&f2, &gens, &tampered));
    } else {
        panic!("expected a group certificate");
    }

    // a no verdict cannot be re-labeled as yes
    let relabeled = Verdict {
        status: Status::Yes,
        evidence: f2.is_tensor_ample(&anti_canonical(&f2)).unwrap().evidence,
        assumptions: vec![],
    };
    assert!(!verify_verdict(
        &f2,
        Property::TensorAmple,
        &anti_canonical(&f2),
        &relabeled
    ));
}

#[test]
fn hodge_index_rejects_wrong_signatures() {
    let gram = RatMat::from_int_rows(&[&[1, 0], &[0, 1]]);
    let err =
        IntersectionLattice::with_hodge_check(gram, vec![String::from("a"), String::from("b")]);
    assert!(matches!(err, Err(SurfaceError::HodgeIndexFailed { .. })));
}

#[test]
fn model_validation_catches_bad_data() {
    let gram = RatMat::from_int_rows(&[&[0, 1], &[1, -2]]);
    let lattice =
        IntersectionLattice::new(gram, vec![String::from("f"), String::from("xi")]).unwrap();
    // a pseff cone missing a catalog curve is rejected
    let bad = SurfaceModelData {
        lattice: lattice.clone(),
        canonical: DivisorClass::from_ints(&[-4, -2]),
        curves: vec![CurveEntry::new(
            String::from("C0"),
            DivisorClass::from_ints(&[0, 1]),
        )
        .unwrap()],
        neg_curves_complete: true,
        curve_cone_generated: true,
        proper_positive_dim: true,
        ample_witness: None,
        pseff_gens: Some(vec![DivisorClass::from_ints(&[1, 0])]),
        nef_gens: None,
    };
    assert!(matches!(
        SurfaceModel::new(bad),
        Err(SurfaceError::PseffMissingCurve { .. })
    ));
    // a witness pairing to zero with a catalog curve is rejected
    let bad_witness = SurfaceModelData {
        lattice,
        canonical: DivisorClass::from_ints(&[-4, -2]),
        curves: vec![CurveEntry::new(
            String::from("C0"),
            DivisorClass::from_ints(&[0, 1]),
        )
        .unwrap()],
        neg_curves_complete: true,
        curve_cone_generated: true,
        proper_positive_dim: true,
        ample_witness: Some(DivisorClass::from_ints(&[-2, 1])),
        pseff_gens: None,
        nef_gens: None,
    };
    assert!(matches!(
        SurfaceModel::new(bad_witness),
        Err(SurfaceError::AmpleWitnessRejected { .. })
    ));
}
