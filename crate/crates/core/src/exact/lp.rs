//! Exact LP feasibility with Farkas certificates.
//!
//! Decides systems of affine constraints `a·x >= r`, `a·x > r`, `a·x = r`
//! over the rationals, returning either an exact feasible point or an exact
//! infeasibility certificate (a signed combination of the constraints whose
//! expansion is contradictory). This is the decision kernel behind cone
//! membership and interior tests; only feasibility is offered, not general
//! optimization.
//!
//! Strict inequalities are handled by maximizing a shared slack variable
//! bounded by 1 ("maximize slack" with rational pivoting): the strict system
//! is feasible iff the optimum slack is positive. Pivoting uses Bland's
//! smallest-index rule throughout, so results and certificates are
//! deterministic for a fixed input order.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ExactError, Rat, RatVec};

/// Relation of a linear constraint `coeffs · x REL rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `coeffs · x >= rhs`
    Ge,
    /// `coeffs · x > rhs`
    Gt,
    /// `coeffs · x = rhs`
    Eq,
}

/// One affine constraint over a fixed-dimension variable vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: RatVec,
    pub rhs: Rat,
    pub rel: Relation,
}

impl LinearConstraint {
    pub fn ge(coeffs: RatVec, rhs: Rat) -> Self {
        LinearConstraint {
            coeffs,
            rhs,
            rel: Relation::Ge,
        }
    }

    pub fn gt(coeffs: RatVec, rhs: Rat) -> Self {
        LinearConstraint {
            coeffs,
            rhs,
            rel: Relation::Gt,
        }
    }

    pub fn eq(coeffs: RatVec, rhs: Rat) -> Self {
        LinearConstraint {
            coeffs,
            rhs,
            rel: Relation::Eq,
        }
    }

    /// Homogeneous forms `coeffs · x REL 0`.
    pub fn ge0(coeffs: RatVec) -> Self {
        Self::ge(coeffs, Rat::zero())
    }

    pub fn gt0(coeffs: RatVec) -> Self {
        Self::gt(coeffs, Rat::zero())
    }

    pub fn eq0(coeffs: RatVec) -> Self {
        Self::eq(coeffs, Rat::zero())
    }

    pub fn holds_at(&self, x: &RatVec) -> bool {
        let v = self.coeffs.dot(x);
        match self.rel {
            Relation::Ge => v >= self.rhs,
            Relation::Gt => v > self.rhs,
            Relation::Eq => v == self.rhs,
        }
    }
}

/// Infeasibility certificate: one multiplier per constraint, nonnegative on
/// inequality rows and free on equality rows, whose combination yields a
/// contradiction. See [`verify_farkas`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    Feasible(RatVec),
    Infeasible(FarkasCertificate),
}

/// Checks a Farkas certificate against the constraint system by direct
/// expansion: the multiplied constraints must sum to the contradiction
/// `0 >= p` with `p > 0`, or `0 > 0` when a strict constraint carries
/// positive weight.
pub fn verify_farkas(
    dim: usize,
    constraints: &[LinearConstraint],
    certificate: &FarkasCertificate,
) -> bool {
    if certificate.multipliers.len() != constraints.len() {
        return false;
    }
    let mut combo = RatVec::zeros(dim);
    let mut rhs_sum = Rat::zero();
    let mut strict_weight = Rat::zero();
    let mut any_nonzero = false;
    for (c, m) in constraints.iter().zip(certificate.multipliers.iter()) {
        if c.coeffs.dim() != dim {
            return false;
        }
        match c.rel {
            Relation::Ge | Relation::Gt => {
                if m.is_negative() {
                    return false;
                }
            }
            Relation::Eq => {}
        }
        if m.is_zero() {
            continue;
        }
        any_nonzero = true;
        combo = combo.add_scaled(m, &c.coeffs);
        rhs_sum += &(m * &c.rhs);
        if c.rel == Relation::Gt {
            strict_weight += m;
        }
    }
    if !any_nonzero || !combo.is_zero() {
        return false;
    }
    rhs_sum.is_positive() || (rhs_sum.is_zero() && strict_weight.is_positive())
}

/// Decides feasibility of the constraint system over `x` in `Q^dim`.
///
/// An empty system is feasible with `x = 0`. Every constraint vector must
/// have dimension `dim`.
pub fn lp_feasible(
    dim: usize,
    constraints: &[LinearConstraint],
) -> Result<FeasibilityResult, ExactError> {
    for c in constraints {
        if c.coeffs.dim() != dim {
            return Err(ExactError::DimMismatch {
                expected: dim,
                got: c.coeffs.dim(),
            });
        }
    }
    if constraints.is_empty() {
        return Ok(FeasibilityResult::Feasible(RatVec::zeros(dim)));
    }
    let mut tableau = Tableau::build(dim, constraints);
    let phase1 = tableau.run_phase(Phase::One)?;
    if phase1.is_positive() {
        let cert = tableau.extract_certificate(Phase::One);
        debug_assert!(
            verify_farkas(dim, constraints, &cert),
            "phase-1 certificate failed self-verification"
        );
        return Ok(FeasibilityResult::Infeasible(cert));
    }
    if !tableau.has_strict {
        let x = tableau.extract_point();
        debug_assert!(constraints.iter().all(|c| c.holds_at(&x)));
        return Ok(FeasibilityResult::Feasible(x));
    }
    tableau.evict_artificials();
    let phase2 = tableau.run_phase(Phase::Two)?;
    // phase 2 minimizes -slack; a negative optimum means positive slack.
    if phase2.is_negative() {
        let x = tableau.extract_point();
        debug_assert!(constraints.iter().all(|c| c.holds_at(&x)));
        Ok(FeasibilityResult::Feasible(x))
    } else {
        let cert = tableau.extract_certificate(Phase::Two);
        debug_assert!(
            verify_farkas(dim, constraints, &cert),
            "phase-2 certificate failed self-verification"
        );
        Ok(FeasibilityResult::Infeasible(cert))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    One,
    Two,
}

/// Dense exact simplex tableau in equality form `A x' = b`, `x' >= 0`.
///
/// Free variables are split `x = u - v`; each inequality gets a surplus
/// column; strict rows share one slack variable bounded by 1; every row gets
/// an artificial column, and the artificial block doubles as a readable copy
/// of the basis inverse for dual extraction.
struct Tableau {
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    dim: usize,
    num_constraints: usize,
    eps_col: Option<usize>,
    art_start: usize,
    total_cols: usize,
    row_signs: Vec<Rat>,
    has_strict: bool,
}

impl Tableau {
    fn build(dim: usize, constraints: &[LinearConstraint]) -> Tableau {
        let has_strict = constraints.iter().any(|c| c.rel == Relation::Gt);
        let num_surplus = constraints
            .iter()
            .filter(|c| c.rel != Relation::Eq)
            .count();
        let m = constraints.len() + usize::from(has_strict);

        let eps_col = has_strict.then_some(2 * dim);
        let surplus_start = 2 * dim + usize::from(has_strict);
        let bound_slack_col = has_strict.then_some(surplus_start + num_surplus);
        let art_start = surplus_start + num_surplus + usize::from(has_strict);
        let total_cols = art_start + m;

        let mut rows = Vec::with_capacity(m);
        let mut row_signs = Vec::with_capacity(m);
        let mut surplus_col = surplus_start;
        for (i, c) in constraints.iter().enumerate() {
            let sign = if c.rhs.is_negative() {
                Rat::from_int(-1)
            } else {
                Rat::one()
            };
            let mut row = vec![Rat::zero(); total_cols + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                row[j] = &sign * a;
                row[dim + j] = -&row[j];
            }
            if c.rel == Relation::Gt {
                row[eps_col.expect("strict row implies eps column")] = -&sign;
            }
            if c.rel != Relation::Eq {
                row[surplus_col] = -&sign;
                surplus_col += 1;
            }
            row[art_start + i] = Rat::one();
            row[total_cols] = &sign * &c.rhs;
            rows.push(row);
            row_signs.push(sign);
        }
        if has_strict {
            // bound row: eps + slack = 1
            let mut row = vec![Rat::zero(); total_cols + 1];
            row[eps_col.expect("strict system has eps column")] = Rat::one();
            row[bound_slack_col.expect("strict system has bound slack")] = Rat::one();
            row[art_start + constraints.len()] = Rat::one();
            row[total_cols] = Rat::one();
            rows.push(row);
            row_signs.push(Rat::one());
        }

        let basis = (0..m).map(|k| art_start + k).collect();
        Tableau {
            rows,
            basis,
            dim,
            num_constraints: constraints.len(),
            eps_col,
            art_start,
            total_cols,
            row_signs,
            has_strict,
        }
    }

    fn cost(&self, phase: Phase, col: usize) -> Rat {
        match phase {
            Phase::One => {
                if col >= self.art_start && col < self.total_cols {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            }
            Phase::Two => {
                if Some(col) == self.eps_col {
                    Rat::from_int(-1)
                } else {
                    Rat::zero()
                }
            }
        }
    }

    fn reduced_costs(&self, phase: Phase) -> Vec<Rat> {
        let mut z = Vec::with_capacity(self.total_cols);
        for col in 0..self.total_cols {
            let mut v = self.cost(phase, col);
            for (r, row) in self.rows.iter().enumerate() {
                let cb = self.cost(phase, self.basis[r]);
                if !cb.is_zero() {
                    v -= &(&cb * &row[col]);
                }
            }
            z.push(v);
        }
        z
    }

    fn objective(&self, phase: Phase) -> Rat {
        let mut v = Rat::zero();
        for (r, row) in self.rows.iter().enumerate() {
            let cb = self.cost(phase, self.basis[r]);
            if !cb.is_zero() {
                v += &(&cb * &row[self.total_cols]);
            }
        }
        v
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for r2 in 0..self.rows.len() {
            if r2 == r || self.rows[r2][c].is_zero() {
                continue;
            }
            let factor = self.rows[r2][c].clone();
            for col in 0..=self.total_cols {
                let delta = &factor * &self.rows[r][col];
                self.rows[r2][col] -= &delta;
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's-rule simplex to optimality for the given phase and
    /// returns the optimal objective value.
    fn run_phase(&mut self, phase: Phase) -> Result<Rat, ExactError> {
        // reduced costs are maintained incrementally; exact arithmetic means
        // there is no drift to correct for.
        let mut z = self.reduced_costs(phase);
        let allowed_end = match phase {
            Phase::One => self.total_cols,
            Phase::Two => self.art_start,
        };
        let mut iterations = 0usize;
        let cap = 10_000 + 100 * (self.total_cols + self.rows.len());
        loop {
            iterations += 1;
            if iterations > cap {
                return Err(ExactError::Internal(format!(
                    "simplex exceeded {cap} iterations; Bland's rule should terminate"
                )));
            }
            let entering = (0..allowed_end).find(|&j| z[j].is_negative());
            let Some(j) = entering else {
                return Ok(self.objective(phase));
            };
            let mut leave: Option<(usize, Rat)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[self.total_cols] / &row[j];
                leave = match leave {
                    None => Some((r, ratio)),
                    Some((br, best)) => {
                        if ratio < best || (ratio == best && self.basis[r] < self.basis[br]) {
                            Some((r, ratio))
                        } else {
                            Some((br, best))
                        }
                    }
                };
            }
            let Some((r, _)) = leave else {
                return Err(ExactError::Internal(format!(
                    "unbounded pivot column {j}; feasibility phases are bounded by construction"
                )));
            };
            let zj = z[j].clone();
            self.pivot(r, j);
            for (col, zc) in z.iter_mut().enumerate() {
                let delta = &zj * &self.rows[r][col];
                *zc -= &delta;
            }
        }
    }

    /// Pivots zero-level basic artificials out onto real columns where
    /// possible; rows left behind are identically zero on real columns and
    /// can never change afterwards.
    fn evict_artificials(&mut self) {
        for r in 0..self.rows.len() {
            if self.basis[r] < self.art_start {
                continue;
            }
            debug_assert!(self.rows[r][self.total_cols].is_zero());
            let col = (0..self.art_start).find(|&c| !self.rows[r][c].is_zero());
            if let Some(c) = col {
                self.pivot(r, c);
            }
        }
    }

    fn extract_point(&self) -> RatVec {
        let mut values = vec![Rat::zero(); self.total_cols];
        for (r, &b) in self.basis.iter().enumerate() {
            values[b] = self.rows[r][self.total_cols].clone();
        }
        (0..self.dim)
            .map(|j| &values[j] - &values[self.dim + j])
            .collect()
    }

    /// Dual multipliers mapped back to the original constraints, scaled to
    /// primitive integers.
    fn extract_certificate(&self, phase: Phase) -> FarkasCertificate {
        let mut mults = Vec::with_capacity(self.num_constraints);
        for i in 0..self.num_constraints {
            let mut y = Rat::zero();
            for (r, row) in self.rows.iter().enumerate() {
                let cb = self.cost(phase, self.basis[r]);
                if !cb.is_zero() {
                    y += &(&cb * &row[self.art_start + i]);
                }
            }
            mults.push(&self.row_signs[i] * &y);
        }
        let normalized = RatVec::new(mults).primitive_integer();
        FarkasCertificate {
            multipliers: normalized.entries().to_vec(),
        }
    }
}
