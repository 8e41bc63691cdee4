//! Zariski decomposition over the curve catalog by iterative support
//! enlargement: seed the support with the curves the class pairs negatively
//! with, solve the Gram system for the coefficients, add newly violated
//! curves, repeat to a fixpoint. The support only grows and the catalog is
//! finite, so termination is immediate.

use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::{is_negative_definite, solve_linear, Rat, RatMat, RatVec};

use super::{DivisorClass, SurfaceError, SurfaceModel};

/// `class = positive + sum coeff * curve` with the positive part pairing
/// nonnegatively with the whole catalog and exactly zero on the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZariskiDecomposition {
    pub positive: DivisorClass,
    /// Support curves with strictly positive coefficients, in catalog order.
    pub negative: Vec<(String, Rat)>,
}

impl ZariskiDecomposition {
    /// Reassembles `positive + sum coeff * curve` from the model catalog.
    pub fn total(&self, model: &SurfaceModel) -> DivisorClass {
        let mut acc = self.positive.clone();
        for (name, coeff) in &self.negative {
            let curve = model
                .curves()
                .iter()
                .find(|c| c.name() == name)
                .expect("decomposition names come from the catalog");
            acc = acc.add(&curve.class().scaled(coeff));
        }
        acc
    }
}

impl SurfaceModel {
    /// The fixpoint computation without any flag requirement; callers decide
    /// what a successful decomposition justifies.
    pub(crate) fn zariski_fixpoint(&self, d: &DivisorClass) -> Option<ZariskiDecomposition> {
        let curves = self.curves();
        let mut in_support = alloc::vec![false; curves.len()];
        for (i, c) in curves.iter().enumerate() {
            if self.lattice().pair_unchecked(d, c.class()).is_negative() {
                in_support[i] = true;
            }
        }
        loop {
            let support: Vec<usize> = (0..curves.len()).filter(|&i| in_support[i]).collect();
            let k = support.len();
            let mut gram = RatMat::zeros(k, k);
            for (a, &i) in support.iter().enumerate() {
                for (b, &j) in support.iter().enumerate() {
                    *gram.get_mut(a, b) = self
                        .lattice()
                        .pair_unchecked(curves[i].class(), curves[j].class());
                }
            }
            let rhs: RatVec = support
                .iter()
                .map(|&i| self.lattice().pair_unchecked(d, curves[i].class()))
                .collect();
            let coeffs = match solve_linear(&gram, &rhs) {
                Ok(Some(c)) if gram.mul_vec(&c).ok()? == rhs => c,
                _ => return None,
            };
            if coeffs.iter().any(Rat::is_negative) {
                return None;
            }
            let mut positive = d.clone();
            for (a, &i) in support.iter().enumerate() {
                positive = positive.sub(&curves[i].class().scaled(&coeffs[a]));
            }
            let mut grew = false;
            for (i, c) in curves.iter().enumerate() {
                if !in_support[i]
                    && self
                        .lattice()
                        .pair_unchecked(&positive, c.class())
                        .is_negative()
                {
                    in_support[i] = true;
                    grew = true;
                }
            }
            if grew {
                continue;
            }

            // fixpoint reached; validate before reporting
            debug_assert!(support.iter().all(|&i| {
                self.lattice()
                    .pair_unchecked(&positive, curves[i].class())
                    .is_zero()
            }));
            let carried: Vec<usize> = support
                .iter()
                .zip(coeffs.iter())
                .filter(|(_, c)| c.is_positive())
                .map(|(&i, _)| i)
                .collect();
            let carried_gram = {
                let k = carried.len();
                let mut g = RatMat::zeros(k, k);
                for (a, &i) in carried.iter().enumerate() {
                    for (b, &j) in carried.iter().enumerate() {
                        *g.get_mut(a, b) = self
                            .lattice()
                            .pair_unchecked(curves[i].class(), curves[j].class());
                    }
                }
                g
            };
            if !is_negative_definite(&carried_gram).ok()? {
                return None;
            }
            let negative: Vec<(String, Rat)> = support
                .iter()
                .zip(coeffs.iter())
                .filter(|(_, c)| c.is_positive())
                .map(|(&i, c)| (String::from(curves[i].name()), c.clone()))
                .collect();
            return Some(ZariskiDecomposition { positive, negative });
        }
    }

    /// Zariski decomposition of a class expressible as (nef over the
    /// catalog) + (effective over the catalog). Requires a complete
    /// negative-curve catalog; returns `None` when no decomposition of the
    /// required shape exists over the catalog.
    pub fn zariski_decompose(
        &self,
        d: &DivisorClass,
    ) -> Result<Option<ZariskiDecomposition>, SurfaceError> {
        self.lattice().check_dim(d)?;
        if !self.neg_curves_complete() {
            return Err(SurfaceError::RequiresNegCurvesComplete);
        }
        Ok(self.zariski_fixpoint(d))
    }
}
