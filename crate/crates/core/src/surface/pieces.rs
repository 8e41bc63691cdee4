//! Decomposition of the tensor-ample region inside the big cone into sign
//! pieces: for each negative catalog curve, its orthogonal hyperplane is
//! removed, and the remaining open regions are enumerated as realized sign
//! assignments. The all-positive piece is the ample cone.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cone::{ConeQ, HalfSpaceQ};
use crate::exact::{lp_feasible, FeasibilityResult, LinearConstraint, Rat};

use super::{DivisorClass, SurfaceError, SurfaceModel};

/// One realized sign assignment over the negative catalog curves, with a
/// rational witness in the corresponding open region of the big cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPiece {
    /// `(curve name, +1 or -1)` per negative catalog curve, catalog order.
    pub signs: Vec<(String, i8)>,
    pub witness: DivisorClass,
}

/// The big cone (as interior of the declared pseudo-effective cone), the
/// orthogonal hyperplanes of the negative curves, and the realized pieces.
#[derive(Clone, Debug)]
pub struct TensorAmplePieces {
    /// Interior of this cone is the big cone.
    pub big_cone: ConeQ,
    /// Pairing half-space per negative catalog curve; its boundary is the
    /// curve's orthogonal hyperplane.
    pub perps: Vec<(String, HalfSpaceQ)>,
    pub pieces: Vec<SignPiece>,
}

impl SurfaceModel {
    /// Enumerates the sign pieces of the big cone cut by the orthogonal
    /// hyperplanes of the negative catalog curves. Requires declared
    /// pseudo-effective generators and a complete negative-curve catalog.
    /// Each returned piece is certified nonempty by a rational witness.
    pub fn tensor_ample_cone_pieces(&self) -> Result<TensorAmplePieces, SurfaceError> {
        let Some(cone) = self.pseff_cone() else {
            return Err(SurfaceError::MissingConeData("pseff_gens"));
        };
        if !self.neg_curves_complete() {
            return Err(SurfaceError::MissingConeData("neg_curves_complete"));
        }
        let negatives = self.negative_curves();
        if negatives.len() > 16 {
            // 2^k feasibility problems; refuse rather than stall
            return Err(SurfaceError::TooManyNegativeCurves {
                count: negatives.len(),
            });
        }
        let mut perps = Vec::with_capacity(negatives.len());
        let mut functionals = Vec::with_capacity(negatives.len());
        for c in &negatives {
            let normal = self.lattice().pairing_functional(c.class())?;
            functionals.push((String::from(c.name()), normal.clone()));
            perps.push((
                String::from(c.name()),
                HalfSpaceQ::new(normal, false)
                    .expect("a negative curve has a nonzero pairing functional"),
            ));
        }

        let mut pieces = Vec::new();
        if cone.is_full_dimensional() {
            let facets = cone.facet_normals()?;
            let rank = self.rank();
            let k = negatives.len();
            for mask in 0u64..(1u64 << k) {
                let mut constraints: Vec<LinearConstraint> = facets
                    .iter()
                    .map(|f| LinearConstraint::gt0(f.clone()))
                    .collect();
                let mut signs = Vec::with_capacity(k);
                for (i, (name, normal)) in functionals.iter().enumerate() {
                    let minus = mask & (1 << i) != 0;
                    signs.push((name.clone(), if minus { -1i8 } else { 1 }));
                    let row = if minus {
                        normal.scaled(&Rat::from_int(-1))
                    } else {
                        normal.clone()
                    };
                    constraints.push(LinearConstraint::gt0(row));
                }
                if let FeasibilityResult::Feasible(witness) = lp_feasible(rank, &constraints)? {
                    pieces.push(SignPiece {
                        signs,
                        witness: DivisorClass::new(witness),
                    });
                }
            }
        }
        Ok(TensorAmplePieces {
            big_cone: cone.clone(),
            perps,
            pieces,
        })
    }
}
