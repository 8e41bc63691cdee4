//! Smooth complete toric surfaces from their boundary cycle: the cyclic
//! list of boundary self-intersections determines the fan by the wheel
//! recurrence `v_{i-1} + a_i v_i + v_{i+1} = 0` starting from the standard
//! first two rays. A cycle is accepted only if the recurrence closes up
//! with unimodular consecutive pairs and the self-intersections sum to
//! `12 - 3k`; the second condition is implied for genuine fans and serves
//! as a cross-check of the first.
//!
//! The divisor class space is the boundary-divisor lattice modulo the two
//! character relations, with the quotient basis chosen by leftmost-pivot
//! elimination: the first two boundary divisors are eliminated, the rest
//! form the basis.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Rat, RatMat};
use crate::surface::{
    CurveEntry, DivisorClass, IntersectionLattice, SurfaceModel, SurfaceModelData,
};

use super::BuildError;

/// Boundary self-intersection cycle of a smooth complete toric surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricCycle {
    selfints: Vec<i64>,
}

impl ToricCycle {
    /// Validates the cycle: reconstructs the rays and requires closure,
    /// unimodularity of consecutive pairs, and the sum rule.
    pub fn new(selfints: Vec<i64>) -> Result<Self, BuildError> {
        let cycle = ToricCycle { selfints };
        cycle.rays()?;
        Ok(cycle)
    }

    pub fn selfints(&self) -> &[i64] {
        &self.selfints
    }

    pub fn len(&self) -> usize {
        self.selfints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selfints.is_empty()
    }

    /// Reconstructs the rays `v0 = (1,0), v1 = (0,1), v_{i+1} = -v_{i-1} -
    /// a_i v_i` and checks all validity conditions.
    pub fn rays(&self) -> Result<Vec<(i64, i64)>, BuildError> {
        let a = &self.selfints;
        let k = a.len();
        if k < 3 {
            return Err(BuildError::InvalidFan {
                reason: format!("a boundary cycle needs at least 3 curves, got {k}"),
            });
        }
        let sum: i64 = a.iter().sum();
        let expected = 12 - 3 * (k as i64);
        if sum != expected {
            return Err(BuildError::InvalidFan {
                reason: format!("self-intersections sum to {sum}, expected {expected}"),
            });
        }
        let mut v: Vec<(i128, i128)> = vec![(1, 0), (0, 1)];
        for i in 1..=k {
            let (px, py) = v[i - 1];
            let (cx, cy) = v[i];
            let coeff = i128::from(a[i % k]);
            let step = (|| {
                let nx = px.checked_add(coeff.checked_mul(cx)?)?.checked_neg()?;
                let ny = py.checked_add(coeff.checked_mul(cy)?)?.checked_neg()?;
                Some((nx, ny))
            })();
            let Some(next) = step else {
                return Err(BuildError::InvalidFan {
                    reason: String::from("ray recurrence overflows; cycle is not a fan"),
                });
            };
            v.push(next);
        }
        if v[k] != v[0] || v[k + 1] != v[1] {
            return Err(BuildError::InvalidFan {
                reason: String::from("ray recurrence does not close up"),
            });
        }
        for i in 0..k {
            let det = v[i].0 * v[i + 1].1 - v[i].1 * v[i + 1].0;
            if det != 1 {
                return Err(BuildError::InvalidFan {
                    reason: format!("consecutive rays {i},{} have determinant {det}", i + 1),
                });
            }
        }
        Ok(v[..k]
            .iter()
            .map(|&(x, y)| (x as i64, y as i64))
            .collect())
    }
}

/// Builds the surface model: rank `k-2` lattice on the boundary divisors
/// `D2..D(k-1)`, canonical class `-sum(Di)`, all boundary curves in the
/// catalog, and the boundary classes as pseudo-effective generators.
pub fn build_toric(cycle: &ToricCycle) -> Result<SurfaceModel, BuildError> {
    let rays = cycle.rays()?;
    let a = cycle.selfints();
    let k = a.len();
    let rank = k - 2;

    // full pairing on the boundary divisors: self-intersections on the
    // diagonal, 1 for cyclic neighbours, 0 otherwise
    let mut full = RatMat::zeros(k, k);
    for (i, &selfint) in a.iter().enumerate() {
        *full.get_mut(i, i) = Rat::from_int(selfint);
        let next = (i + 1) % k;
        *full.get_mut(i, next) = Rat::one();
        *full.get_mut(next, i) = Rat::one();
    }

    // quotient by the two character relations; leftmost pivots are the
    // columns of D0 and D1 because the first rays are the standard basis
    let class_of = |divisor: usize| -> DivisorClass {
        let coeffs: Vec<Rat> = (2..k)
            .map(|j| {
                let mut v = if divisor == j { Rat::one() } else { Rat::zero() };
                if divisor == 0 {
                    v = v - Rat::from_int(rays[j].0);
                }
                if divisor == 1 {
                    v = v - Rat::from_int(rays[j].1);
                }
                v
            })
            .collect();
        DivisorClass::new(coeffs.into_iter().collect())
    };

    let gram = full.principal_submatrix(&(2..k).collect::<Vec<_>>());
    let names: Vec<String> = (2..k).map(|i| format!("D{i}")).collect();
    let lattice = IntersectionLattice::with_hodge_check(gram, names)?;

    // the quotient pairing must reproduce the full boundary pairing; this
    // cross-validates the elimination
    let classes: Vec<DivisorClass> = (0..k).map(class_of).collect();
    for i in 0..k {
        for j in 0..k {
            let got = lattice.pair(&classes[i], &classes[j])?;
            if got != *full.get(i, j) {
                return Err(BuildError::InvalidFan {
                    reason: format!(
                        "quotient pairing D{i}·D{j} = {got}, boundary data says {}",
                        full.get(i, j)
                    ),
                });
            }
        }
    }

    let mut canonical = DivisorClass::zero(rank);
    for c in &classes {
        canonical = canonical.sub(c);
    }

    let curves: Vec<CurveEntry> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| CurveEntry::new(format!("D{i}"), c.clone()))
        .collect::<Result<_, _>>()?;

    let data = SurfaceModelData {
        lattice,
        canonical,
        pseff_gens: Some(classes),
        nef_gens: None,
        curves,
        neg_curves_complete: true,
        curve_cone_generated: true,
        proper_positive_dim: true,
        ample_witness: None,
    };
    Ok(SurfaceModel::new(data)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Status;

    #[test]
    fn projective_plane_cycle() {
        let m = build_toric(&ToricCycle::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.canonical(), &DivisorClass::from_ints(&[-3]));
        // every boundary curve is a line
        for c in m.curves() {
            assert_eq!(c.class(), &DivisorClass::from_ints(&[1]));
            assert_eq!(m.arithmetic_genus(c.class()).unwrap(), Rat::zero());
        }
    }

    #[test]
    fn invalid_cycles_rejected() {
        assert!(ToricCycle::new(vec![0, 0, 0]).is_err()); // sum rule fails
        assert!(ToricCycle::new(vec![1, 1]).is_err()); // too short
        assert!(ToricCycle::new(vec![2, 1, 0, -1]).is_err()); // sum 2 != 0
        // correct sum but the recurrence does not close
        assert!(ToricCycle::new(vec![3, -1, 1, -3]).is_err());
    }

    #[test]
    fn random_perturbations_of_valid_cycles_are_rejected() {
        let valid: [&[i64]; 3] = [&[1, 1, 1], &[0, -2, 0, 2], &[-1, -1, -1, -1, -1, -1]];
        for base in valid {
            assert!(ToricCycle::new(base.to_vec()).is_ok());
            for i in 0..base.len() {
                for delta in [-2i64, -1, 1, 2] {
                    let mut fuzzed = base.to_vec();
                    fuzzed[i] += delta;
                    assert!(
                        ToricCycle::new(fuzzed.clone()).is_err(),
                        "perturbed cycle {fuzzed:?} accepted"
                    );
                }
            }
        }
    }

    #[test]
    fn hirzebruch_like_cycle_matches_known_data() {
        // (0,-2,0,2): the -2 boundary curve is orthogonal to the canonical
        let m = build_toric(&ToricCycle::new(vec![0, -2, 0, 2]).unwrap()).unwrap();
        assert_eq!(m.rank(), 2);
        let d1 = m.curves()[1].class().clone();
        assert_eq!(m.pair(&d1, &d1).unwrap(), Rat::from_int(-2));
        assert!(m.is_minus_two_curve(&d1).unwrap());
        let report = m.canonical_report().unwrap();
        assert_eq!(report.tensor_ample.status, Status::No);
        assert_eq!(report.minus_two_curves, vec![String::from("D1")]);
    }

    #[test]
    fn del_pezzo_six_cycle_builds() {
        let m = build_toric(&ToricCycle::new(vec![-1; 6]).unwrap()).unwrap();
        assert_eq!(m.rank(), 4);
        assert_eq!(m.negative_curves().len(), 6);
        let report = m.canonical_report().unwrap();
        assert_eq!(report.tensor_ample.status, Status::Yes);
        assert!(report.minus_two_curves.is_empty());
        assert_eq!(report.minus_two_free_cross_check, Some(true));
    }
}
