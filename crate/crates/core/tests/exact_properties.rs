//! Property tests for the exact kernel: arithmetic exactness, linear-solve
//! round trips, and the LP trichotomy with certificate verification.

use proptest::prelude::*;

use tensamp_core::exact::{
    lp_feasible, solve_linear, verify_farkas, FeasibilityResult, LinearConstraint, Rat, RatMat,
    RatVec, Relation,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| Rat::new(n, d))
}

/// Everything is immutable after construction, so the whole stack is safe
/// for unlimited concurrent use.
#[test]
fn core_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<Rat>();
    check::<RatVec>();
    check::<RatMat>();
    check::<LinearConstraint>();
    check::<tensamp_core::cone::ConeQ>();
    check::<tensamp_core::surface::SurfaceModel>();
    check::<tensamp_core::surface::Verdict>();
    check::<tensamp_core::builders::CurveModel>();
    check::<tensamp_core::scheme::SchemeModel>();
}

/// A notoriously ill-conditioned system is exact here: the Hilbert matrix
/// against the all-ones solution.
#[test]
fn hilbert_system_solves_exactly() {
    let n = 6usize;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(Rat::new(1, (i + j + 1) as i64));
        }
    }
    let h = RatMat::new(n, n, entries).unwrap();
    let ones: RatVec = (0..n).map(|_| Rat::one()).collect();
    let b = h.mul_vec(&ones).unwrap();
    assert_eq!(solve_linear(&h, &b).unwrap(), Some(ones));
}

proptest! {
    #[test]
    fn addition_round_trips(a in small_rat(), b in small_rat()) {
        prop_assert_eq!((&a + &b) - &b, a.clone());
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_distributes(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn constructed_systems_solve_exactly(
        (rows, cols) in (1usize..=4, 1usize..=4),
        seed in proptest::collection::vec((-9i64..=9, 1i64..=4), 32),
    ) {
        let mut it = seed.into_iter().map(|(n, d)| Rat::new(n, d)).cycle();
        let data: Vec<Rat> = (0..rows * cols).map(|_| it.next().unwrap()).collect();
        let a = RatMat::new(rows, cols, data).unwrap();
        let x0: RatVec = (0..cols).map(|_| it.next().unwrap()).collect();
        let b = a.mul_vec(&x0).unwrap();
        let solved = solve_linear(&a, &b).unwrap();
        prop_assert!(solved.is_some(), "a constructed system must be consistent");
        let x = solved.unwrap();
        prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn systems_built_around_a_point_are_feasible(
        dim in 1usize..=3,
        point in proptest::collection::vec((-6i64..=6, 1i64..=3), 3),
        rows in proptest::collection::vec(
            (proptest::collection::vec(-4i64..=4, 3), 0u8..3u8),
            1..6,
        ),
    ) {
        // every constraint is manufactured to hold strictly at the point
        let x0 = RatVec::new(point[..dim].iter().map(|&(n, d)| Rat::new(n, d)).collect());
        let constraints: Vec<LinearConstraint> = rows
            .into_iter()
            .map(|(coeffs, rel)| {
                let v = RatVec::from_ints(&coeffs[..dim]);
                let at_point = v.dot(&x0);
                match rel {
                    0 => LinearConstraint::ge(v, &at_point - &Rat::one()),
                    1 => LinearConstraint::gt(v, &at_point - &Rat::one()),
                    _ => LinearConstraint::eq(v, at_point),
                }
            })
            .collect();
        match lp_feasible(dim, &constraints).unwrap() {
            FeasibilityResult::Feasible(x) => {
                for c in &constraints {
                    prop_assert!(c.holds_at(&x));
                }
            }
            FeasibilityResult::Infeasible(cert) => {
                prop_assert!(false, "system satisfied by {x0:?} reported infeasible: {cert:?}");
            }
        }
    }

    #[test]
    fn planted_contradictions_are_detected(
        dim in 1usize..=3,
        pivot in proptest::collection::vec(-5i64..=5, 3),
        cut in -4i64..=4,
        noise in proptest::collection::vec(
            (proptest::collection::vec(-4i64..=4, 3), -4i64..=4),
            0..4,
        ),
    ) {
        // a·x > c together with a·x <= c is contradictory whatever else holds
        let a = RatVec::from_ints(&pivot[..dim]);
        let mut constraints = vec![
            LinearConstraint::gt(a.clone(), Rat::from_int(cut)),
            LinearConstraint::ge(-&a, Rat::from_int(-cut)),
        ];
        constraints.extend(noise.into_iter().map(|(coeffs, rhs)| {
            LinearConstraint::ge(RatVec::from_ints(&coeffs[..dim]), Rat::from_int(rhs))
        }));
        match lp_feasible(dim, &constraints).unwrap() {
            FeasibilityResult::Feasible(x) => {
                prop_assert!(false, "contradictory system reported feasible at {x:?}");
            }
            FeasibilityResult::Infeasible(cert) => {
                prop_assert!(verify_farkas(dim, &constraints, &cert));
            }
        }
    }

    #[test]
    fn lp_results_always_check_out(
        dim in 1usize..=3,
        raw in proptest::collection::vec(
            (proptest::collection::vec(-4i64..=4, 3), -4i64..=4, 0u8..3u8),
            0..6,
        ),
    ) {
        let constraints: Vec<LinearConstraint> = raw
            .into_iter()
            .map(|(coeffs, rhs, rel)| {
                let v = RatVec::from_ints(&coeffs[..dim]);
                let r = Rat::from_int(rhs);
                match rel {
                    0 => LinearConstraint::ge(v, r),
                    1 => LinearConstraint::gt(v, r),
                    _ => LinearConstraint::eq(v, r),
                }
            })
            .collect();
        match lp_feasible(dim, &constraints).unwrap() {
            FeasibilityResult::Feasible(x) => {
                prop_assert_eq!(x.dim(), dim);
                for c in &constraints {
                    prop_assert!(c.holds_at(&x), "feasible point violates {:?}", c);
                }
            }
            FeasibilityResult::Infeasible(cert) => {
                prop_assert!(verify_farkas(dim, &constraints, &cert));
                // nonnegative multipliers on inequalities, by construction
                for (c, m) in constraints.iter().zip(cert.multipliers.iter()) {
                    if c.rel != Relation::Eq {
                        prop_assert!(!m.is_negative());
                    }
                }
            }
        }
    }
}
