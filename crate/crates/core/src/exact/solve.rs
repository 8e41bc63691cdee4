use alloc::vec;
use alloc::vec::Vec;

use super::{ExactError, Rat, RatMat, RatVec};

/// Reduced row echelon form of `[a | extra]`, eliminating with the leftmost
/// nonzero pivot in each column and the smallest-index row. Returns the pivot
/// column per pivot row.
fn rref(m: &mut RatMat, active_cols: usize) -> Vec<usize> {
    let rows = m.rows();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..active_cols {
        if pivot_row == rows {
            break;
        }
        let found = (pivot_row..rows).find(|&r| !m.get(r, col).is_zero());
        let Some(r) = found else { continue };
        if r != pivot_row {
            for c in 0..m.cols() {
                let a = m.get(r, c).clone();
                let b = m.get(pivot_row, c).clone();
                *m.get_mut(r, c) = b;
                *m.get_mut(pivot_row, c) = a;
            }
        }
        let inv = m.get(pivot_row, col).recip();
        for c in 0..m.cols() {
            let v = m.get(pivot_row, c) * &inv;
            *m.get_mut(pivot_row, c) = v;
        }
        for r2 in 0..rows {
            if r2 == pivot_row || m.get(r2, col).is_zero() {
                continue;
            }
            let factor = m.get(r2, col).clone();
            for c in 0..m.cols() {
                let v = m.get(r2, c) - &(&factor * m.get(pivot_row, c));
                *m.get_mut(r2, c) = v;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

/// Solves `a * x = b` exactly.
///
/// Returns `None` when the system is inconsistent. When underdetermined, the
/// solution has zero components on every non-pivot column under
/// leftmost-pivot elimination, which makes the answer deterministic.
pub fn solve_linear(a: &RatMat, b: &RatVec) -> Result<Option<RatVec>, ExactError> {
    if b.dim() != a.rows() {
        return Err(ExactError::DimMismatch {
            expected: a.rows(),
            got: b.dim(),
        });
    }
    let n = a.cols();
    let mut aug = RatMat::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            *aug.get_mut(r, c) = a.get(r, c).clone();
        }
        *aug.get_mut(r, n) = b[r].clone();
    }
    let pivots = rref(&mut aug, n);
    for r in pivots.len()..a.rows() {
        if !aug.get(r, n).is_zero() {
            return Ok(None);
        }
    }
    let mut x = RatVec::zeros(n);
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug.get(row, n).clone();
    }
    Ok(Some(x))
}

/// Rank of the matrix.
pub fn rank(a: &RatMat) -> usize {
    let mut m = a.clone();
    rref(&mut m, a.cols()).len()
}

/// Basis of the right nullspace `{x : a * x = 0}`.
pub fn nullspace_basis(a: &RatMat) -> Vec<RatVec> {
    let n = a.cols();
    let mut m = a.clone();
    let pivots = rref(&mut m, n);
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut v = RatVec::zeros(n);
        v[free] = Rat::one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = -m.get(row, free);
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square matrix by exact elimination.
pub fn determinant(a: &RatMat) -> Result<Rat, ExactError> {
    if !a.is_square() {
        return Err(ExactError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut det = Rat::one();
    for col in 0..n {
        let found = (col..n).find(|&r| !m.get(r, col).is_zero());
        let Some(r) = found else {
            return Ok(Rat::zero());
        };
        if r != col {
            det = -det;
            for c in 0..n {
                let x = m.get(r, c).clone();
                let y = m.get(col, c).clone();
                *m.get_mut(r, c) = y;
                *m.get_mut(col, c) = x;
            }
        }
        let pivot = m.get(col, col).clone();
        det *= &pivot;
        for r2 in (col + 1)..n {
            if m.get(r2, col).is_zero() {
                continue;
            }
            let factor = m.get(r2, col) / &pivot;
            for c in col..n {
                let v = m.get(r2, c) - &(&factor * m.get(col, c));
                *m.get_mut(r2, c) = v;
            }
        }
    }
    Ok(det)
}

/// Signature `(n_plus, n_minus, n_zero)` of a symmetric rational matrix.
///
/// Computes the characteristic polynomial exactly (Faddeev–LeVerrier) and
/// counts eigenvalue signs by Descartes' rule, which is exact here because a
/// symmetric matrix has only real eigenvalues.
pub fn symmetric_signature(g: &RatMat) -> Result<(usize, usize, usize), ExactError> {
    if !g.is_square() {
        return Err(ExactError::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    if !g.is_symmetric() {
        return Err(ExactError::NotSymmetric);
    }
    let n = g.rows();
    if n == 0 {
        return Ok((0, 0, 0));
    }

    let trace = |m: &RatMat| -> Rat { (0..m.rows()).map(|i| m.get(i, i).clone()).sum() };
    let mat_mul = |a: &RatMat, b: &RatMat| -> RatMat {
        let mut out = RatMat::zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for k in 0..a.cols() {
                let aik = a.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..b.cols() {
                    let v = out.get(i, j) + &(aik * b.get(k, j));
                    *out.get_mut(i, j) = v;
                }
            }
        }
        out
    };

    // coeffs[k] multiplies lambda^(n-1-k); leading coefficient is 1.
    let mut coeffs: Vec<Rat> = Vec::with_capacity(n);
    let mut m = g.clone();
    let mut c = -trace(&m);
    coeffs.push(c.clone());
    for k in 1..n {
        let mut shifted = m.clone();
        for i in 0..n {
            let v = shifted.get(i, i) + &c;
            *shifted.get_mut(i, i) = v;
        }
        m = mat_mul(g, &shifted);
        c = -(trace(&m) / &Rat::from_int((k + 1) as i64));
        coeffs.push(c.clone());
    }

    let mut full = vec![Rat::one()];
    full.extend(coeffs);
    let n_zero = full.iter().rev().take_while(|c| c.is_zero()).count();
    let mut n_pos = 0;
    let mut last_sign = 0i8;
    for c in &full {
        let s = c.signum();
        if s == 0 {
            continue;
        }
        if last_sign != 0 && s != last_sign {
            n_pos += 1;
        }
        last_sign = s;
    }
    Ok((n_pos, n - n_pos - n_zero, n_zero))
}

/// Negative-definiteness by leading principal minors: the k-th minor must
/// have sign `(-1)^k`. The empty matrix is vacuously negative definite.
pub fn is_negative_definite(g: &RatMat) -> Result<bool, ExactError> {
    if !g.is_square() {
        return Err(ExactError::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    for k in 1..=g.rows() {
        let idx: Vec<usize> = (0..k).collect();
        let minor = determinant(&g.principal_submatrix(&idx))?;
        let want_positive = k % 2 == 0;
        if (want_positive && !minor.is_positive()) || (!want_positive && !minor.is_negative()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system() {
        let a = RatMat::from_int_rows(&[&[1, 0], &[0, 1]]);
        let b = RatVec::from_ints(&[3, 5]);
        assert_eq!(
            solve_linear(&a, &b).unwrap(),
            Some(RatVec::from_ints(&[3, 5]))
        );
    }

    #[test]
    fn leftmost_pivot_convention() {
        let a = RatMat::from_int_rows(&[&[1, 1]]);
        let b = RatVec::from_ints(&[2]);
        assert_eq!(
            solve_linear(&a, &b).unwrap(),
            Some(RatVec::from_ints(&[2, 0]))
        );
    }

    #[test]
    fn inconsistent_system() {
        let a = RatMat::from_int_rows(&[&[1], &[1]]);
        let b = RatVec::from_ints(&[1, 2]);
        assert_eq!(solve_linear(&a, &b).unwrap(), None);
        let bad = RatVec::from_ints(&[1]);
        assert!(solve_linear(&a, &bad).is_err());
    }

    #[test]
    fn nullspace_and_rank() {
        let a = RatMat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let ns = nullspace_basis(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn determinant_small_cases() {
        let a = RatMat::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(determinant(&a).unwrap(), Rat::from_int(-2));
        let s = RatMat::from_int_rows(&[&[2, 0], &[0, 0]]);
        assert_eq!(determinant(&s).unwrap(), Rat::zero());
    }

    #[test]
    fn signatures() {
        // hyperbolic plane [[0,1],[1,e]] has signature (1,1) for any e
        for e in [-3i64, -2, 0, 5] {
            let g = RatMat::from_int_rows(&[&[0, 1], &[1, e]]);
            assert_eq!(symmetric_signature(&g).unwrap(), (1, 1, 0), "e={e}");
        }
        let g = RatMat::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        assert_eq!(symmetric_signature(&g).unwrap(), (1, 2, 0));
        let z = RatMat::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(symmetric_signature(&z).unwrap(), (1, 0, 1));
    }

    #[test]
    fn negative_definiteness() {
        let g = RatMat::from_int_rows(&[&[-2, 1], &[1, -2]]);
        assert!(is_negative_definite(&g).unwrap());
        let h = RatMat::from_int_rows(&[&[-1, 0], &[0, 1]]);
        assert!(!is_negative_definite(&h).unwrap());
        let e = RatMat::zeros(0, 0);
        assert!(is_negative_definite(&e).unwrap());
        // negative semidefinite but singular is rejected
        let s = RatMat::from_int_rows(&[&[-1, 1], &[1, -1]]);
        assert!(!is_negative_definite(&s).unwrap());
    }
}
