//! Verdict operations on surface models.
//!
//! Bigness resolves through a fixed precedence of routes: (1) interior of a
//! declared pseudo-effective cone (decisive both ways); (2) an exact
//! decomposition `D = P + N` over the catalog with `P^2 > 0`, justified by
//! the curve-cone flag; (3) the signature test against the declared ample
//! witness; (4) the same decomposition justified by a positive witness
//! pairing (the Zariski route). A witness pairing `D · A <= 0` is a sound
//! `No` on its own: big classes pair strictly positively with an ample
//! class.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cone::ConeError;
use crate::exact::Rat;

use super::{
    Assumption, CanonicalReport, ConeKind, CurveEntry, DivisorClass, Evidence, Property, Status,
    SurfaceError, SurfaceModel, Verdict,
};

impl SurfaceModel {
    pub(crate) fn curve_pairings(&self, d: &DivisorClass) -> Vec<(String, Rat)> {
        self.curves()
            .iter()
            .map(|c| {
                (
                    String::from(c.name()),
                    self.lattice().pair_unchecked(d, c.class()),
                )
            })
            .collect()
    }

    /// Catalog curves of negative self-intersection, in catalog order.
    pub fn negative_curves(&self) -> Vec<&CurveEntry> {
        self.curves()
            .iter()
            .filter(|c| {
                self.lattice()
                    .pair_unchecked(c.class(), c.class())
                    .is_negative()
            })
            .collect()
    }

    /// Arithmetic genus `(K·C + C^2)/2 + 1` of a curve class.
    pub fn arithmetic_genus(&self, c: &DivisorClass) -> Result<Rat, SurfaceError> {
        self.lattice().check_dim(c)?;
        let kc = self.lattice().pair_unchecked(self.canonical(), c);
        let c2 = self.lattice().pair_unchecked(c, c);
        Ok((kc + c2) / Rat::from_int(2) + Rat::one())
    }

    /// True iff `C^2 = -2` and `K·C = 0`: the exact obstruction to a big or
    /// anti-big canonical class being tensor-ample.
    pub fn is_minus_two_curve(&self, c: &DivisorClass) -> Result<bool, SurfaceError> {
        self.lattice().check_dim(c)?;
        let c2 = self.lattice().pair_unchecked(c, c);
        let kc = self.lattice().pair_unchecked(self.canonical(), c);
        Ok(c2 == Rat::from_int(-2) && kc.is_zero())
    }

    pub fn classify(&self, property: Property, d: &DivisorClass) -> Result<Verdict, SurfaceError> {
        match property {
            Property::Nef => self.is_nef(d),
            Property::Ample => self.is_ample(d),
            Property::Big => self.is_big(d),
            Property::AntiBig => self.is_anti_big(d),
            Property::TensorAmple => self.is_tensor_ample(d),
        }
    }

    /// Nef: nonnegative pairing with every integral curve. A negative
    /// catalog pairing is a sound `No`; a `Yes` needs either declared nef
    /// generators or a catalog generating the curve cone.
    pub fn is_nef(&self, d: &DivisorClass) -> Result<Verdict, SurfaceError> {
        self.lattice().check_dim(d)?;
        let pairings = self.curve_pairings(d);
        if let Some((name, pairing)) = pairings.iter().find(|(_, p)| p.is_negative()) {
            return Ok(Verdict::no(
                Evidence::CurveWitness {
                    name: name.clone(),
                    pairing: pairing.clone(),
                },
                vec![],
            ));
        }
        if let Some(cone) = self.nef_cone() {
            return Ok(match cone.contains(d.coeffs())? {
                crate::cone::Membership::Inside { coefficients } => Verdict::yes(
                    Evidence::ConeCoefficients {
                        cone: ConeKind::Nef,
                        coefficients,
                    },
                    vec![Assumption::NefGens],
                ),
                crate::cone::Membership::Outside { separating } => Verdict::no(
                    Evidence::SeparatingFunctional {
                        cone: ConeKind::Nef,
                        functional: separating,
                    },
                    vec![Assumption::NefGens],
                ),
            });
        }
        if self.curve_cone_generated() {
            return Ok(Verdict::yes(
                Evidence::CatalogPairings { pairings },
                vec![Assumption::CurveConeGenerated],
            ));
        }
        Ok(Verdict::unknown(
            "all catalog pairings are nonnegative, but the catalog is not known to generate the curve cone",
        ))
    }

    /// Pseudo-effectivity via the declared cone; `Unknown` without cone
    /// data.
    pub fn is_pseff(&self, d: &DivisorClass) -> Result<Verdict, SurfaceError> {
        self.lattice().check_dim(d)?;
        let Some(cone) = self.pseff_cone() else {
            return Ok(Verdict::unknown("no pseudo-effective cone data declared"));
        };
        Ok(match cone.contains(d.coeffs())? {
            crate::cone::Membership::Inside { coefficients } => Verdict::yes(
                Evidence::ConeCoefficients {
                    cone: ConeKind::Pseff,
                    coefficients,
                },
                vec![Assumption::PseffGens],
            ),
            crate::cone::Membership::Outside { separating } => Verdict::no(
                Evidence::SeparatingFunctional {
                    cone: ConeKind::Pseff,
                    functional: separating,
                },
                vec![Assumption::PseffGens],
            ),
        })
    }

    /// Bigness: interior of the pseudo-effective cone. Routes are tried in
    /// the order documented on the module.
    pub fn is_big(&self, d: &DivisorClass) -> Result<Verdict, SurfaceError> {
        self.lattice().check_dim(d)?;
        if d.is_zero() && self.proper_positive_dim() {
            return Ok(Verdict::no(Evidence::ZeroClass, vec![]));
        }

        // route 1: interior of the declared pseudo-effective cone
        if let Some(cone) = self.pseff_cone() {
            match self.pseff_interior_verdict(cone, d) {
                Ok(v) => return Ok(v),
                Err(SurfaceError::Cone(
                    ConeError::DimensionCap { .. } | ConeError::EnumerationTooLarge { .. },
                )) => {}
                Err(e) => return Err(e),
            }
        }

        let decomposition = self.zariski_fixpoint(d);

        // route 2: decomposition with the catalog generating the curve cone
        if self.curve_cone_generated() {
            if let Some(z) = &decomposition {
                let p2 = self.lattice().pair_unchecked(&z.positive, &z.positive);
                if p2.is_positive() {
                    return Ok(Verdict::yes(
                        Evidence::Decomposition {
                            positive: z.positive.clone(),
                            negative_part: z.negative.clone(),
                            positive_self_int: p2,
                        },
                        vec![Assumption::CurveConeGenerated],
                    ));
                }
            }
        }

        // route 3: signature test against the declared ample witness; a
        // nonpositive witness pairing refutes bigness outright
        if let Some(a) = self.ample_witness() {
            let da = self.lattice().pair_unchecked(d, a);
            if !da.is_positive() {
                return Ok(Verdict::no(
                    Evidence::WitnessObstruction {
                        witness_pairing: da,
                    },
                    vec![Assumption::AmpleWitness],
                ));
            }
            let d2 = self.lattice().pair_unchecked(d, d);
            if d2.is_positive() {
                return Ok(Verdict::yes(
                    Evidence::SignaturePairing {
                        self_int: d2,
                        witness_pairing: da,
                    },
                    vec![Assumption::AmpleWitness],
                ));
            }
        }

        // route 4: Zariski route, positive side certified by the witness
        if self.neg_curves_complete() {
            if let (Some(z), Some(a)) = (&decomposition, self.ample_witness()) {
                let p2 = self.lattice().pair_unchecked(&z.positive, &z.positive);
                let pa = self.lattice().pair_unchecked(&z.positive, a);
                if p2.is_positive() && pa.is_positive() {
                    return Ok(Verdict::yes(
                        Evidence::Decomposition {
                            positive: z.positive.clone(),
                            negative_part: z.negative.clone(),
                            positive_self_int: p2,
                        },
                        vec![Assumption::NegCurvesComplete, Assumption::AmpleWitness],
                    ));
                }
            }
        }

        Ok(Verdict::unknown(
            "bigness undecided: no pseudo-effective cone data, and neither a certified decomposition nor a signature witness applies",
        ))
    }

    fn pseff_interior_verdict(
        &self,
        cone: &crate::cone::ConeQ,
        d: &DivisorClass,
    ) -> Result<Verdict, SurfaceError> {
        if !cone.is_full_dimensional() {
            // empty interior: every class fails; witness any functional
            // vanishing on the cone span
            let gen_rows = cone.generators().to_vec();
            let span = if gen_rows.is_empty() {
                crate::exact::RatMat::zeros(0, self.rank())
            } else {
                crate::exact::RatMat::from_rows(gen_rows)?
            };
            let normals = crate::exact::nullspace_basis(&span);
            let normal = normals
                .first()
                .expect("a non-full-dimensional cone has a nonzero orthogonal functional")
                .primitive_integer();
            let functional = if normal.dot(d.coeffs()).is_positive() {
                -&normal
            } else {
                normal
            };
            return Ok(Verdict::no(
                Evidence::BoundaryFunctional { functional },
                vec![Assumption::PseffGens],
            ));
        }
        if d.is_zero() && self.rank() > 0 {
            // zero is never interior in positive rank (pointedness convention)
            return Ok(Verdict::no(Evidence::ZeroClass, vec![Assumption::PseffGens]));
        }
        let facets = cone.facet_normals().map_err(SurfaceError::Cone)?;
        let mut values = Vec::with_capacity(facets.len());
        for f in &facets {
            let v = f.dot(d.coeffs());
            if !v.is_positive() {
                return Ok(Verdict::no(
                    Evidence::BoundaryFunctional {
                        functional: f.clone(),
                    },
                    vec![Assumption::PseffGens],
                ));
            }
            values.push(v);
        }
        Ok(Verdict::yes(
            Evidence::InteriorFacetValues { values },
            vec![Assumption::PseffGens],
        ))
    }

    /// Anti-big: the inverse class is big.
    pub fn is_anti_big(&self, d: &DivisorClass) -> Result<Verdict, SurfaceError> {
        self.is_big(&d.neg())
    }

    /// Ample in the Nakai–Moishezon form used here: big with strictly
    /// positive pairing against every catalog curve, with a complete
    /// negative-curve catalog for the `Yes` side. A nonpositive pairing
    /// with any catalog curve is a sound `No`.
    pub fn is_ample(&self, d: &DivisorClass) -> Result<Verdict, SurfaceError> {
        self.lattice().check_dim(d)?;
        let pairings = self.curve_pairings(d);
        if let Some((name, pairing)) = pairings.iter().find(|(_, p)| !p.is_positive()) {
            return Ok(Verdict::no(
                Evidence::CurveWitness {
                    name: name.clone(),
                    pairing: pairing.clone(),
                },
                vec![],
            ));
        }
        let big = self.is_big(d)?;
        match big.status {
            Status::No => {
                let assumptions = big.assumptions.clone();
                Ok(Verdict::no(
                    Evidence::NotBig { big: Box::new(big) },
                    assumptions,
                ))
            }
            Status::Yes if self.neg_curves_complete() => {
                let mut assumptions = big.assumptions.clone();
                assumptions.push(Assumption::NegCurvesComplete);
                Ok(Verdict::yes(
                    Evidence::BigSideWithPairings {
                        anti_side: false,
                        big_side: Box::new(big),
                        pairings,
                    },
                    assumptions,
                ))
            }
            Status::Yes => Ok(Verdict::unknown(
                "big with positive catalog pairings, but the negative-curve catalog is not known complete",
            )),
            Status::Unknown => Ok(Verdict::unknown("bigness undecided")),
        }
    }

    /// Tensor-ample on a surface: some side (the class or its inverse) is
    /// big, and the pairing with every negative curve is nonzero. A zero
    /// pairing with any catalog curve is a sound `No` (the restriction to
    /// that curve has degree zero); both sides failing bigness is a sound
    /// `No` on the surface itself.
    pub fn is_tensor_ample(&self, d: &DivisorClass) -> Result<Verdict, SurfaceError> {
        self.lattice().check_dim(d)?;
        let pairings = self.curve_pairings(d);
        if let Some((name, pairing)) = pairings.iter().find(|(_, p)| p.is_zero()) {
            return Ok(Verdict::no(
                Evidence::CurveWitness {
                    name: name.clone(),
                    pairing: pairing.clone(),
                },
                vec![],
            ));
        }
        let big = self.is_big(d)?;
        let anti_big = self.is_big(&d.neg())?;
        if big.is_no() && anti_big.is_no() {
            let mut assumptions = big.assumptions.clone();
            assumptions.extend(anti_big.assumptions.iter().copied());
            return Ok(Verdict::no(
                Evidence::NeitherBigNorAntiBig {
                    big: Box::new(big),
                    anti_big: Box::new(anti_big),
                },
                assumptions,
            ));
        }
        let big_side_available = big.is_yes() || anti_big.is_yes();
        if big_side_available && self.neg_curves_complete() {
            let (anti_side, side) = if big.is_yes() {
                (false, big)
            } else {
                (true, anti_big)
            };
            let negative_pairings: Vec<(String, Rat)> = self
                .negative_curves()
                .iter()
                .map(|c| {
                    (
                        String::from(c.name()),
                        self.lattice().pair_unchecked(d, c.class()),
                    )
                })
                .collect();
            let mut assumptions = side.assumptions.clone();
            assumptions.push(Assumption::NegCurvesComplete);
            return Ok(Verdict::yes(
                Evidence::BigSideWithPairings {
                    anti_side,
                    big_side: Box::new(side),
                    pairings: negative_pairings,
                },
                assumptions,
            ));
        }
        if big_side_available {
            return Ok(Verdict::unknown(
                "one side is big and no catalog pairing vanishes, but the negative-curve catalog is not known complete",
            ));
        }
        Ok(Verdict::unknown("bigness undecided on both sides"))
    }

    /// Canonical-class report: bigness of both sides, the (-2)-curves in
    /// the catalog, the tensor-ample verdict, and (on the `Yes` path) the
    /// redundant cross-check that no (-2)-curve exists.
    pub fn canonical_report(&self) -> Result<CanonicalReport, SurfaceError> {
        let k = self.canonical().clone();
        let big = self.is_big(&k)?;
        let anti_big = self.is_anti_big(&k)?;
        let minus_two_curves: Vec<String> = self
            .curves()
            .iter()
            .filter(|c| {
                self.is_minus_two_curve(c.class())
                    .expect("catalog classes have the lattice rank")
            })
            .map(|c| String::from(c.name()))
            .collect();
        let tensor_ample = self.is_tensor_ample(&k)?;
        let minus_two_free_cross_check = if tensor_ample.is_yes() {
            Some(minus_two_curves.is_empty())
        } else {
            None
        };
        Ok(CanonicalReport {
            big,
            anti_big,
            minus_two_curves,
            tensor_ample,
            minus_two_free_cross_check,
        })
    }

    /// Decides whether the subgroup generated by the given classes contains
    /// a member restricting to a big class on every integral subscheme:
    /// the span must meet the interior of the big cone, and for every
    /// negative catalog curve some generator must pair nonzero with it.
    pub fn group_tensor_ample(&self, gens: &[DivisorClass]) -> Result<Verdict, SurfaceError> {
        for g in gens {
            self.lattice().check_dim(g)?;
        }
        // a curve orthogonal to every generator defeats every member
        for c in self.curves() {
            if gens
                .iter()
                .all(|g| self.lattice().pair_unchecked(g, c.class()).is_zero())
            {
                return Ok(Verdict::no(
                    Evidence::AllGeneratorsOrthogonal {
                        name: String::from(c.name()),
                    },
                    vec![],
                ));
            }
        }
        // a single ample generator settles it
        for (index, g) in gens.iter().enumerate() {
            if Some(g) == self.ample_witness() {
                return Ok(Verdict::yes(
                    Evidence::AmpleGenerator { index },
                    vec![Assumption::AmpleWitness],
                ));
            }
            let ample = self.is_ample(g)?;
            if ample.is_yes() {
                return Ok(Verdict::yes(
                    Evidence::AmpleGenerator { index },
                    ample.assumptions,
                ));
            }
        }
        let Some(cone) = self.pseff_cone() else {
            return Ok(Verdict::unknown(
                "no pseudo-effective cone data to test the span against the big cone",
            ));
        };
        let span: Vec<crate::exact::RatVec> = gens.iter().map(|g| g.coeffs().clone()).collect();
        let interior_point = match cone.subspace_interior_point(&span) {
            Ok(p) => p,
            Err(ConeError::DimensionCap { .. } | ConeError::EnumerationTooLarge { .. }) => {
                return Ok(Verdict::unknown(
                    "facet enumeration is out of reach here; span-versus-big test unavailable",
                ))
            }
            Err(e) => return Err(SurfaceError::Cone(e)),
        };
        let Some((point, combination)) = interior_point else {
            return Ok(Verdict::no(
                Evidence::SpanMissesBig,
                vec![Assumption::PseffGens],
            ));
        };
        if !self.neg_curves_complete() {
            return Ok(Verdict::unknown(
                "the span meets the big cone, but the negative-curve catalog is not known complete",
            ));
        }
        let mut curve_pairings = Vec::new();
        for c in self.negative_curves() {
            let hit = gens
                .iter()
                .enumerate()
                .find_map(|(i, g)| {
                    let p = self.lattice().pair_unchecked(g, c.class());
                    (!p.is_zero()).then_some((i, p))
                })
                .expect("the all-orthogonal scan above already excluded this");
            curve_pairings.push((String::from(c.name()), hit.0, hit.1));
        }
        Ok(Verdict::yes(
            Evidence::GroupCertificate {
                point: DivisorClass::new(point),
                combination,
                curve_pairings,
            },
            vec![Assumption::PseffGens, Assumption::NegCurvesComplete],
        ))
    }
}
