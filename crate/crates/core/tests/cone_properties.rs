//! Cone engine properties: membership against an exhaustive coefficient
//! search, duality involution on random cones, and certificate soundness.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tensamp_core::cone::{ConeQ, Membership};
use tensamp_core::exact::{Rat, RatVec};

fn v2(x: i64, y: i64) -> RatVec {
    RatVec::from_ints(&[x, y])
}

/// Exhaustive membership oracle for a rank-2 cone with two independent
/// integer generators: every expression of an integer point over the
/// generators has first coefficient p/q with q dividing the determinant and
/// p/q bounded by the adjugate norm, so scanning that grid and solving the
/// second coefficient exactly is a complete search.
fn brute_force_member(g1: &RatVec, g2: &RatVec, x: &RatVec, det: i64) -> bool {
    let qmax = det.unsigned_abs().max(1) as i64;
    let bound = Rat::from_int(18);
    // a coordinate of g2 that lets us solve for the second coefficient
    let pivot = if !g2[0].is_zero() { 0 } else { 1 };
    let other = 1 - pivot;
    for q in 1..=qmax {
        let mut p = 0i64;
        loop {
            let c1 = Rat::new(p, q);
            if c1 > bound {
                break;
            }
            let c2 = (&x[pivot] - &(&c1 * &g1[pivot])) / &g2[pivot];
            if !c2.is_negative() {
                let lhs = &(&c1 * &g1[other]) + &(&c2 * &g2[other]);
                if lhs == x[other] {
                    return true;
                }
            }
            p += 1;
        }
    }
    false
}

#[test]
fn membership_matches_exhaustive_search_on_rank2_cones() {
    let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
    let mut checked = 0;
    while checked < 60 {
        let g1 = v2(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let g2 = v2(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if g1.is_zero() || g2.is_zero() {
            continue;
        }
        let det_rat = &(&g1[0] * &g2[1]) - &(&g1[1] * &g2[0]);
        if det_rat.is_zero() {
            continue;
        }
        let det: i64 = format!("{det_rat}").parse().unwrap();
        if det.abs() > 6 {
            continue;
        }
        // orient the pair so coefficients are recovered consistently
        let cone = ConeQ::new(2, vec![g1.clone(), g2.clone()]).unwrap();
        for _ in 0..10 {
            let x = v2(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            let member = cone.contains(&x).unwrap();
            assert!(member.verify(&cone, &x), "certificate must re-verify");
            assert_eq!(
                member.is_inside(),
                brute_force_member(&g1, &g2, &x, det),
                "disagreement at cone <{g1:?},{g2:?}> point {x:?}"
            );
        }
        checked += 1;
    }
}

#[test]
fn membership_matches_search_on_the_worked_cone() {
    let g1 = v2(1, 0);
    let g2 = v2(1, 2);
    let cone = ConeQ::new(2, vec![g1.clone(), g2.clone()]).unwrap();
    for x0 in -3..=3 {
        for x1 in -3..=3 {
            let x = v2(x0, x1);
            let member = cone.contains(&x).unwrap();
            assert!(member.verify(&cone, &x));
            assert_eq!(member.is_inside(), brute_force_member(&g1, &g2, &x, 2));
        }
    }
}

#[test]
fn duality_is_an_involution_on_random_cones() {
    let mut rng = StdRng::seed_from_u64(0xd0a1);
    let mut done = 0;
    while done < 50 {
        let dim = if done % 2 == 0 { 2 } else { 3 };
        let count = rng.gen_range(1..=5);
        let gens: Vec<RatVec> = (0..count)
            .map(|_| {
                RatVec::from_ints(
                    &(0..dim)
                        .map(|_| rng.gen_range(-3i64..=3))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        if gens.iter().any(RatVec::is_zero) {
            continue;
        }
        let cone = ConeQ::new(dim, gens).unwrap();
        let dual = cone.dual().unwrap();
        let double = dual.dual().unwrap();
        for g in cone.generators() {
            let m = double.contains(g).unwrap();
            assert!(m.verify(&double, g));
            assert!(m.is_inside(), "generator {g:?} must lie in the double dual");
        }
        for g in double.generators() {
            let m = cone.contains(g).unwrap();
            assert!(m.verify(&cone, g));
            assert!(
                m.is_inside(),
                "double-dual generator {g:?} must lie in the original cone"
            );
        }
        // dual generators pair nonnegatively with the original generators
        for y in dual.generators() {
            for g in cone.generators() {
                assert!(!y.dot(g).is_negative());
            }
        }
        done += 1;
    }
}

#[test]
fn interior_points_are_members_with_verified_certificates() {
    let mut rng = StdRng::seed_from_u64(0xfacade);
    for _ in 0..40 {
        let gens = vec![
            v2(rng.gen_range(1..=3), rng.gen_range(-3..=3)),
            v2(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
        ];
        let Ok(cone) = ConeQ::new(2, gens) else {
            continue;
        };
        for _ in 0..8 {
            let x = v2(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            if cone.interior_contains(&x).unwrap() {
                let m = cone.contains(&x).unwrap();
                assert!(matches!(m, Membership::Inside { .. }));
                assert!(m.verify(&cone, &x));
            }
        }
    }
}
