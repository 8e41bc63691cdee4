//! Finitely generated rational polyhedral cones in a fixed-rank ambient
//! space: membership with certificates, duality, topological interior, linear
//! subspace vs. interior tests, and 2D slices for plotting.
//!
//! Membership runs through the LP kernel and works in any dimension. Duality
//! (and everything built on facet normals: interior tests, subspace tests)
//! enumerates extreme rays exactly and is capped at ambient dimension
//! [`FACET_DIM_CAP`]; beyond the cap only membership is offered.

use alloc::vec::Vec;
use core::fmt;

use crate::exact::{
    lp_feasible, nullspace_basis, rank, solve_linear, ExactError, FeasibilityResult,
    LinearConstraint, Rat, RatMat, RatVec,
};

/// Largest ambient dimension for which facet enumeration is attempted.
/// Blow-ups of the plane in up to 11 points (rank 12) fit under the cap.
pub const FACET_DIM_CAP: usize = 12;

/// Largest number of generator subsets ray enumeration will walk through.
const SUBSET_ENUMERATION_CAP: u128 = 2_000_000;

fn subset_count(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((m - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Errors from cone operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeError {
    DimMismatch { expected: usize, got: usize },
    ZeroGenerator { index: usize },
    /// Facet enumeration requested above [`FACET_DIM_CAP`].
    DimensionCap { dim: usize },
    /// Ray enumeration would walk too many generator subsets.
    EnumerationTooLarge { generators: usize, dim: usize },
    GeneratorOutsidePlane { index: usize },
    DependentPlaneBasis,
    Internal(ExactError),
}

impl fmt::Display for ConeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeError::DimMismatch { expected, got } => {
                write!(f, "ambient dimension mismatch: expected {expected}, got {got}")
            }
            ConeError::ZeroGenerator { index } => {
                write!(f, "generator {index} is the zero vector")
            }
            ConeError::DimensionCap { dim } => write!(
                f,
                "facet enumeration capped at ambient dimension {FACET_DIM_CAP}, got {dim}"
            ),
            ConeError::EnumerationTooLarge { generators, dim } => write!(
                f,
                "ray enumeration over {generators} generators in dimension {dim} is too large"
            ),
            ConeError::GeneratorOutsidePlane { index } => {
                write!(f, "generator {index} does not lie in the slice plane")
            }
            ConeError::DependentPlaneBasis => write!(f, "slice plane basis is dependent"),
            ConeError::Internal(e) => write!(f, "internal error: {e}"),
        }
    }
}

impl From<ExactError> for ConeError {
    fn from(e: ExactError) -> Self {
        ConeError::Internal(e)
    }
}

/// Closed or open half-space `{x : normal · x >= 0}` (or `> 0` when strict).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpaceQ {
    pub normal: RatVec,
    pub strict: bool,
}

impl HalfSpaceQ {
    pub fn new(normal: RatVec, strict: bool) -> Option<Self> {
        if normal.is_zero() {
            return None;
        }
        Some(HalfSpaceQ { normal, strict })
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        let v = self.normal.dot(x);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }
}

/// Result of a cone membership query, carrying its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Nonnegative coefficients expressing the point over the generators.
    Inside { coefficients: Vec<Rat> },
    /// A functional nonnegative on every generator and negative on the point.
    Outside { separating: RatVec },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside { .. })
    }

    /// Re-checks the certificate against the cone and point by direct
    /// evaluation.
    pub fn verify(&self, cone: &ConeQ, x: &RatVec) -> bool {
        if x.dim() != cone.ambient_dim {
            return false;
        }
        match self {
            Membership::Inside { coefficients } => {
                if coefficients.len() != cone.generators.len() {
                    return false;
                }
                if coefficients.iter().any(Rat::is_negative) {
                    return false;
                }
                let mut acc = RatVec::zeros(cone.ambient_dim);
                for (c, g) in coefficients.iter().zip(cone.generators.iter()) {
                    acc = acc.add_scaled(c, g);
                }
                acc == *x
            }
            Membership::Outside { separating } => {
                if separating.dim() != cone.ambient_dim || separating.is_zero() {
                    return false;
                }
                cone.generators
                    .iter()
                    .all(|g| !separating.dot(g).is_negative())
                    && separating.dot(x).is_negative()
            }
        }
    }
}

/// Finitely generated rational polyhedral cone. Generators are nonzero; the
/// zero cone is the empty generator list. The representation is not required
/// to be minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeQ {
    ambient_dim: usize,
    generators: Vec<RatVec>,
}

impl ConeQ {
    pub fn new(ambient_dim: usize, generators: Vec<RatVec>) -> Result<Self, ConeError> {
        for (index, g) in generators.iter().enumerate() {
            if g.dim() != ambient_dim {
                return Err(ConeError::DimMismatch {
                    expected: ambient_dim,
                    got: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(ConeError::ZeroGenerator { index });
            }
        }
        Ok(ConeQ {
            ambient_dim,
            generators,
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        ConeQ {
            ambient_dim,
            generators: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[RatVec] {
        &self.generators
    }

    fn generator_matrix(&self) -> RatMat {
        if self.generators.is_empty() {
            return RatMat::zeros(0, self.ambient_dim);
        }
        RatMat::from_rows(self.generators.clone()).expect("generators share the ambient dimension")
    }

    /// Farkas-style membership with certificate: either nonnegative
    /// coefficients over the generators or a separating functional.
    pub fn contains(&self, x: &RatVec) -> Result<Membership, ConeError> {
        if x.dim() != self.ambient_dim {
            return Err(ConeError::DimMismatch {
                expected: self.ambient_dim,
                got: x.dim(),
            });
        }
        if x.is_zero() {
            return Ok(Membership::Inside {
                coefficients: alloc::vec![Rat::zero(); self.generators.len()],
            });
        }
        let n = self.generators.len();
        // variables: coefficients over the generators
        let mut constraints = Vec::with_capacity(self.ambient_dim + n);
        for k in 0..self.ambient_dim {
            let row: RatVec = self.generators.iter().map(|g| g[k].clone()).collect();
            constraints.push(LinearConstraint::eq(row, x[k].clone()));
        }
        for i in 0..n {
            constraints.push(LinearConstraint::ge0(RatVec::unit(n, i)));
        }
        let result = match lp_feasible(n, &constraints)? {
            FeasibilityResult::Feasible(coeffs) => Membership::Inside {
                coefficients: coeffs.entries().to_vec(),
            },
            FeasibilityResult::Infeasible(cert) => {
                // multipliers on the equality rows give the separating
                // functional (negated); see the LP module for the sign
                // bookkeeping.
                let separating: RatVec = (0..self.ambient_dim)
                    .map(|k| -&cert.multipliers[k])
                    .collect();
                Membership::Outside {
                    separating: separating.primitive_integer(),
                }
            }
        };
        if !result.verify(self, x) {
            return Err(ConeError::Internal(ExactError::Internal(alloc::format!(
                "membership certificate failed self-verification for {x:?}"
            ))));
        }
        Ok(result)
    }

    pub fn is_full_dimensional(&self) -> bool {
        if self.ambient_dim == 0 {
            return true;
        }
        rank(&self.generator_matrix()) == self.ambient_dim
    }

    /// The dual cone `{y : y · g >= 0 for all generators g}`, as a generator
    /// list (lineality directions appear as +/- pairs). Exact, deterministic,
    /// capped at [`FACET_DIM_CAP`].
    pub fn dual(&self) -> Result<ConeQ, ConeError> {
        let d = self.ambient_dim;
        if d > FACET_DIM_CAP {
            return Err(ConeError::DimensionCap { dim: d });
        }
        let gen_mat = self.generator_matrix();
        let lineality = nullspace_basis(&gen_mat);
        let mut out: Vec<RatVec> = Vec::new();
        fn push_unique(v: RatVec, out: &mut Vec<RatVec>) {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        for l in &lineality {
            let p = l.primitive_integer();
            push_unique(p.clone(), &mut out);
            push_unique(-&p, &mut out);
        }

        // complement of the lineality: the dual splits as lineality + its
        // pointed part inside this complement
        let complement = if lineality.is_empty() {
            (0..d).map(|i| RatVec::unit(d, i)).collect::<Vec<_>>()
        } else {
            nullspace_basis(&RatMat::from_rows(lineality.clone())?)
        };
        let dp = complement.len();
        if dp == 0 {
            return ConeQ::new(d, out);
        }

        let m = self.generators.len();
        if subset_count(m, dp.saturating_sub(1)) > SUBSET_ENUMERATION_CAP {
            return Err(ConeError::EnumerationTooLarge {
                generators: m,
                dim: dp,
            });
        }
        let mut reduced = RatMat::zeros(m, dp);
        for (i, g) in self.generators.iter().enumerate() {
            for (j, w) in complement.iter().enumerate() {
                *reduced.get_mut(i, j) = g.dot(w);
            }
        }

        let lift = |z: &RatVec| -> RatVec {
            let mut y = RatVec::zeros(d);
            for (zj, w) in z.iter().zip(complement.iter()) {
                y = y.add_scaled(zj, w);
            }
            y.primitive_integer()
        };
        let feasible = |z: &RatVec| -> bool {
            (0..m).all(|i| !reduced.row_vec(i).dot(z).is_negative())
        };

        if dp == 1 {
            for cand in [RatVec::from_ints(&[1]), RatVec::from_ints(&[-1])] {
                if feasible(&cand) {
                    push_unique(lift(&cand), &mut out);
                }
            }
            return ConeQ::new(d, out);
        }

        // every extreme ray of the pointed part is the nullspace of some
        // rank dp-1 subset of the reduced generator rows
        if m < dp - 1 {
            return ConeQ::new(d, out);
        }
        let mut subset: Vec<usize> = (0..dp - 1).collect();
        loop {
            let sub = RatMat::from_rows(subset.iter().map(|&i| reduced.row_vec(i)).collect())?;
            if rank(&sub) == dp - 1 {
                let ns = nullspace_basis(&sub);
                if ns.len() == 1 {
                    let z = ns[0].primitive_integer();
                    if feasible(&z) {
                        push_unique(lift(&z), &mut out);
                    } else {
                        let neg = -&z;
                        if feasible(&neg) {
                            push_unique(lift(&neg), &mut out);
                        }
                    }
                }
            }
            // next lexicographic subset of size dp-1 from 0..m
            let k = subset.len();
            let mut i = k;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if subset[i] != i + m - k {
                    subset[i] += 1;
                    for j in i + 1..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return ConeQ::new(d, out);
            }
        }
    }

    /// Facet normals: generators of the dual cone. For a full-dimensional
    /// cone these are exactly the outer description's normals.
    pub fn facet_normals(&self) -> Result<Vec<RatVec>, ConeError> {
        Ok(self.dual()?.generators)
    }

    /// Topological interior test. False whenever the cone is not
    /// full-dimensional. By convention the zero vector is never interior
    /// unless the ambient dimension is 0 (this matches treating the zero
    /// class as not big on a proper positive-dimensional model).
    pub fn interior_contains(&self, x: &RatVec) -> Result<bool, ConeError> {
        if x.dim() != self.ambient_dim {
            return Err(ConeError::DimMismatch {
                expected: self.ambient_dim,
                got: x.dim(),
            });
        }
        if self.ambient_dim == 0 {
            return Ok(true);
        }
        if x.is_zero() || !self.is_full_dimensional() {
            return Ok(false);
        }
        let facets = self.facet_normals()?;
        Ok(facets.iter().all(|f| f.dot(x).is_positive()))
    }

    /// A rational point of `span(vectors) ∩ interior(self)` together with the
    /// combination producing it, or `None` when the intersection is empty.
    pub fn subspace_interior_point(
        &self,
        span: &[RatVec],
    ) -> Result<Option<(RatVec, Vec<Rat>)>, ConeError> {
        for v in span {
            if v.dim() != self.ambient_dim {
                return Err(ConeError::DimMismatch {
                    expected: self.ambient_dim,
                    got: v.dim(),
                });
            }
        }
        if self.ambient_dim == 0 {
            return Ok(Some((RatVec::zeros(0), alloc::vec![Rat::zero(); span.len()])));
        }
        if !self.is_full_dimensional() {
            return Ok(None);
        }
        let facets = self.facet_normals()?;
        if facets.is_empty() {
            // the cone is the whole space; any nonzero span vector is interior
            return Ok(span.iter().enumerate().find(|(_, v)| !v.is_zero()).map(
                |(i, v)| {
                    let mut combo = alloc::vec![Rat::zero(); span.len()];
                    combo[i] = Rat::one();
                    (v.clone(), combo)
                },
            ));
        }
        let n = span.len();
        let constraints: Vec<LinearConstraint> = facets
            .iter()
            .map(|f| {
                let row: RatVec = span.iter().map(|v| f.dot(v)).collect();
                LinearConstraint::gt0(row)
            })
            .collect();
        match lp_feasible(n, &constraints)? {
            FeasibilityResult::Feasible(combo) => {
                let mut point = RatVec::zeros(self.ambient_dim);
                for (c, v) in combo.iter().zip(span.iter()) {
                    point = point.add_scaled(c, v);
                }
                debug_assert!(facets.iter().all(|f| f.dot(&point).is_positive()));
                Ok(Some((point, combo.entries().to_vec())))
            }
            FeasibilityResult::Infeasible(_) => Ok(None),
        }
    }

    /// True iff the linear span of the inputs contains an interior point.
    pub fn subspace_meets_interior(&self, span: &[RatVec]) -> Result<bool, ConeError> {
        Ok(self.subspace_interior_point(span)?.is_some())
    }

    /// Extremal rays of the cone expressed in coordinates of the given plane,
    /// ordered counterclockwise. Every generator must lie in the plane span.
    /// Returns the pair of boundary rays (one entry for a single ray, empty
    /// for the zero cone or a cone with angular extent above pi).
    pub fn slice2d(&self, plane_u: &RatVec, plane_v: &RatVec) -> Result<Vec<RatVec>, ConeError> {
        if plane_u.dim() != self.ambient_dim || plane_v.dim() != self.ambient_dim {
            return Err(ConeError::DimMismatch {
                expected: self.ambient_dim,
                got: if plane_u.dim() != self.ambient_dim {
                    plane_u.dim()
                } else {
                    plane_v.dim()
                },
            });
        }
        let basis = RatMat::from_rows(alloc::vec![plane_u.clone(), plane_v.clone()])?;
        if rank(&basis) != 2 {
            return Err(ConeError::DependentPlaneBasis);
        }
        let coord_matrix = basis.transpose(); // d x 2, columns u and v
        let mut rays: Vec<RatVec> = Vec::new();
        for (index, g) in self.generators.iter().enumerate() {
            let alpha = solve_linear(&coord_matrix, g)?
                .filter(|a| {
                    // solve_linear zero-fills free columns; confirm it is a
                    // genuine solution
                    coord_matrix.mul_vec(a).map(|img| &img == g).unwrap_or(false)
                })
                .ok_or(ConeError::GeneratorOutsidePlane { index })?;
            let p = alpha.primitive_integer();
            if !rays.contains(&p) {
                rays.push(p);
            }
        }
        if rays.is_empty() {
            return Ok(rays);
        }
        let cross = |a: &RatVec, b: &RatVec| -> Rat { &(&a[0] * &b[1]) - &(&a[1] * &b[0]) };
        let within = |a: &RatVec, s: &RatVec, b: &RatVec| -> bool {
            if a == b {
                return s == a;
            }
            !cross(a, s).is_negative() && !cross(s, b).is_negative()
        };
        // candidate boundary pairs (a, b) spanning a sector of extent <= pi
        // that contains every ray; O(n^3) on a handful of rays
        for a in &rays {
            for b in &rays {
                let extent_ok = if a == b {
                    true
                } else {
                    let c = cross(a, b);
                    c.is_positive() || (c.is_zero() && a.dot(b).is_negative())
                };
                if !extent_ok {
                    continue;
                }
                if rays.iter().all(|s| within(a, s, b)) {
                    return Ok(if a == b {
                        alloc::vec![a.clone()]
                    } else {
                        alloc::vec![a.clone(), b.clone()]
                    });
                }
            }
        }
        Ok(Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone2(gens: &[&[i64]]) -> ConeQ {
        ConeQ::new(
            gens.first().map_or(2, |g| g.len()),
            gens.iter().map(|g| RatVec::from_ints(g)).collect(),
        )
        .unwrap()
    }

    fn v(x: &[i64]) -> RatVec {
        RatVec::from_ints(x)
    }

    #[test]
    fn membership_with_coefficients() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        match c.contains(&v(&[2, 2])).unwrap() {
            Membership::Inside { coefficients } => {
                assert_eq!(coefficients, alloc::vec![Rat::one(), Rat::one()]);
            }
            other => panic!("expected inside, got {other:?}"),
        }
    }

    #[test]
    fn membership_outside_with_functional() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        let m = c.contains(&v(&[0, 1])).unwrap();
        assert!(m.verify(&c, &v(&[0, 1])));
        match m {
            Membership::Outside { separating } => {
                // brute-force oracle: smallest valid integer functional is (2, -1)
                let mut minimal = None;
                'outer: for a in -3i64..=3 {
                    for b in -3i64..=3 {
                        let f = v(&[a, b]);
                        if f.is_zero() {
                            continue;
                        }
                        let ok = !f.dot(&v(&[1, 0])).is_negative()
                            && !f.dot(&v(&[1, 2])).is_negative()
                            && f.dot(&v(&[0, 1])).is_negative();
                        if ok {
                            minimal = Some(f);
                            break 'outer;
                        }
                    }
                }
                assert_eq!(minimal, Some(v(&[2, -1])));
                assert_eq!(separating, v(&[2, -1]));
            }
            other => panic!("expected outside, got {other:?}"),
        }
    }

    #[test]
    fn zero_vector_is_inside_any_cone() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        match c.contains(&v(&[0, 0])).unwrap() {
            Membership::Inside { coefficients } => {
                assert!(coefficients.iter().all(Rat::is_zero));
            }
            other => panic!("expected inside, got {other:?}"),
        }
        let z = ConeQ::zero(2);
        assert!(z.contains(&v(&[0, 0])).unwrap().is_inside());
        let out = z.contains(&v(&[1, 1])).unwrap();
        assert!(!out.is_inside());
        assert!(out.verify(&z, &v(&[1, 1])));
    }

    #[test]
    fn dual_of_orthant_is_orthant() {
        let c = cone2(&[&[1, 0], &[0, 1]]);
        let d = c.dual().unwrap();
        let gens: Vec<_> = d.generators().to_vec();
        assert_eq!(gens.len(), 2);
        assert!(gens.contains(&v(&[1, 0])) && gens.contains(&v(&[0, 1])));
    }

    #[test]
    fn dual_rank2_hand_computed() {
        // facets of <(1,0),(1,2)> enumerate to (0,1) and (2,-1)
        let c = cone2(&[&[1, 0], &[1, 2]]);
        let d = c.dual().unwrap();
        assert_eq!(d.generators(), &[v(&[0, 1]), v(&[2, -1])]);
    }

    #[test]
    fn dual_of_zero_cone_is_full_space() {
        let z = ConeQ::zero(2);
        let d = z.dual().unwrap();
        assert_eq!(
            d.generators(),
            &[v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])]
        );
    }

    #[test]
    fn dual_of_single_ray_is_half_space() {
        let c = cone2(&[&[1, 0]]);
        let d = c.dual().unwrap();
        assert_eq!(d.generators(), &[v(&[0, 1]), v(&[0, -1]), v(&[1, 0])]);
        let dd = d.dual().unwrap();
        assert_eq!(dd.generators(), &[v(&[1, 0])]);
    }

    #[test]
    fn dual_respects_dimension_cap() {
        let g: Vec<RatVec> = (0..13).map(|i| RatVec::unit(13, i)).collect();
        let c = ConeQ::new(13, g).unwrap();
        assert_eq!(c.dual(), Err(ConeError::DimensionCap { dim: 13 }));
    }

    #[test]
    fn dual_refuses_oversized_subset_enumeration() {
        // 40 generators in rank 12: the subset walk would be billions deep
        let mut gens: Vec<RatVec> = (0..12).map(|i| RatVec::unit(12, i)).collect();
        'fill: for i in 0..12 {
            for j in (i + 1)..12 {
                gens.push(&RatVec::unit(12, i) + &RatVec::unit(12, j));
                if gens.len() == 40 {
                    break 'fill;
                }
            }
        }
        let c = ConeQ::new(12, gens).unwrap();
        assert_eq!(
            c.dual(),
            Err(ConeError::EnumerationTooLarge {
                generators: 40,
                dim: 12
            })
        );
        // membership is still offered
        assert!(c.contains(&RatVec::unit(12, 3)).unwrap().is_inside());
    }

    #[test]
    fn interior_tests() {
        let c = cone2(&[&[1, 0], &[0, 1]]);
        assert!(c.interior_contains(&v(&[1, 1])).unwrap());
        assert!(!c.interior_contains(&v(&[1, 0])).unwrap());
        assert!(!c.interior_contains(&v(&[0, 0])).unwrap());
        assert!(!c.interior_contains(&v(&[-1, 1])).unwrap());
        let ray = cone2(&[&[1, 0]]);
        assert!(!ray.interior_contains(&v(&[1, 0])).unwrap());
        assert!(!ray.interior_contains(&v(&[1, 1])).unwrap());
    }

    #[test]
    fn subspace_meets_interior_examples() {
        let c = cone2(&[&[1, 0], &[0, 1]]);
        assert!(c.subspace_meets_interior(&[v(&[1, 1])]).unwrap());
        assert!(!c.subspace_meets_interior(&[v(&[1, -1])]).unwrap());
        assert!(c
            .subspace_meets_interior(&[v(&[1, 0]), v(&[0, 1])])
            .unwrap());
        // the span is linear: a generator pointing out of the cone still works
        assert!(c.subspace_meets_interior(&[v(&[-1, -1])]).unwrap());
        let (point, _) = c.subspace_interior_point(&[v(&[-1, -1])]).unwrap().unwrap();
        assert!(c.interior_contains(&point).unwrap());
    }

    #[test]
    fn slice_examples() {
        let e1 = v(&[1, 0]);
        let e2 = v(&[0, 1]);
        let c = cone2(&[&[1, 0], &[1, 2]]);
        assert_eq!(c.slice2d(&e1, &e2).unwrap(), alloc::vec![v(&[1, 0]), v(&[1, 2])]);
        let with_inner = cone2(&[&[1, 0], &[1, 1], &[1, 2]]);
        assert_eq!(
            with_inner.slice2d(&e1, &e2).unwrap(),
            alloc::vec![v(&[1, 0]), v(&[1, 2])]
        );
        assert!(ConeQ::zero(2).slice2d(&e1, &e2).unwrap().is_empty());
        let single = cone2(&[&[2, 4]]);
        assert_eq!(single.slice2d(&e1, &e2).unwrap(), alloc::vec![v(&[1, 2])]);
        // generators outside the plane are a usage error
        let c3 = ConeQ::new(3, alloc::vec![v(&[1, 0, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(
            c3.slice2d(&v(&[1, 0, 0]), &v(&[0, 1, 0])),
            Err(ConeError::GeneratorOutsidePlane { index: 1 })
        );
    }

    #[test]
    fn slice_of_half_plane_and_beyond() {
        let half = cone2(&[&[1, 0], &[0, 1], &[-1, 0]]);
        let rays = half.slice2d(&v(&[1, 0]), &v(&[0, 1])).unwrap();
        assert_eq!(rays, alloc::vec![v(&[1, 0]), v(&[-1, 0])]);
        let full = cone2(&[&[1, 0], &[0, 1], &[-1, -1]]);
        assert!(full.slice2d(&v(&[1, 0]), &v(&[0, 1])).unwrap().is_empty());
    }

    #[test]
    fn interior_implies_membership() {
        let c = cone2(&[&[2, 1], &[1, 3]]);
        for x in [v(&[3, 4]), v(&[2, 1]), v(&[5, 5]), v(&[-1, 2]), v(&[0, -3])] {
            if c.interior_contains(&x).unwrap() {
                assert!(c.contains(&x).unwrap().is_inside());
            }
        }
    }
}
