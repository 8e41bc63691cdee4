use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{ExactError, Rat, RatVec};

/// Dense `rows x cols` matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::BadShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(RatMat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<RatVec>) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, RatVec::dim);
        for r in &rows {
            if r.dim() != cols {
                return Err(ExactError::DimMismatch {
                    expected: cols,
                    got: r.dim(),
                });
            }
        }
        let n = rows.len();
        let data = rows
            .into_iter()
            .flat_map(|r| r.entries().to_vec())
            .collect();
        RatMat::new(n, cols, data)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged integer rows");
            data.extend(r.iter().map(|&v| Rat::from_int(v)));
        }
        RatMat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> RatVec {
        RatVec::new(self.row(r).to_vec())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &RatVec) -> Result<RatVec, ExactError> {
        if v.dim() != self.cols {
            return Err(ExactError::DimMismatch {
                expected: self.cols,
                got: v.dim(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v.iter())
                    .map(|(a, b)| a * b)
                    .sum::<Rat>()
            })
            .collect())
    }

    pub fn transpose(&self) -> RatMat {
        let mut out = RatMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        out
    }

    /// Square submatrix picking the given row/column indices (with
    /// repetition disallowed by construction in callers).
    pub fn principal_submatrix(&self, idx: &[usize]) -> RatMat {
        let n = idx.len();
        let mut out = RatMat::zeros(n, n);
        for (i, &ri) in idx.iter().enumerate() {
            for (j, &cj) in idx.iter().enumerate() {
                *out.get_mut(i, j) = self.get(ri, cj).clone();
            }
        }
        out
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
