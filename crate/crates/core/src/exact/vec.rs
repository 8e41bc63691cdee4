use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Fixed-dimension vector of exact rationals.
///
/// Arithmetic between vectors of different dimensions is a bug in the caller;
/// the operators panic with a clear message. Fallible entry points with real
/// error reporting live on the structures that own dimension metadata.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec {
    entries: Vec<Rat>,
}

impl RatVec {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVec { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        RatVec {
            entries: vec![Rat::zero(); dim],
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RatVec {
            entries: values.iter().map(|&v| Rat::from_int(v)).collect(),
        }
    }

    /// Standard basis vector `e_index` in the given dimension.
    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit vector index out of range");
        let mut v = Self::zeros(dim);
        v[index] = Rat::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Rat> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dot product dimension mismatch");
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scaled(&self, factor: &Rat) -> RatVec {
        RatVec {
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: &Rat, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim(), "add_scaled dimension mismatch");
        RatVec {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a + &(factor * b))
                .collect(),
        }
    }

    /// Scales to the unique primitive integer vector on the same ray
    /// (coprime integer entries, direction preserved). Zero maps to zero.
    pub fn primitive_integer(&self) -> RatVec {
        if self.is_zero() {
            return RatVec::zeros(self.dim());
        }
        let mut denom_lcm = BigInt::one();
        for e in &self.entries {
            denom_lcm = denom_lcm.lcm(e.denom());
        }
        let scale = Rat::from_int(denom_lcm);
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| (e * &scale).numer().clone())
            .collect();
        let mut g = BigInt::zero();
        for i in &ints {
            g = g.gcd(&i.abs());
        }
        RatVec {
            entries: ints.into_iter().map(|i| Rat::from_int(i / &g)).collect(),
        }
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, index: usize) -> &Rat {
        &self.entries[index]
    }
}

impl IndexMut<usize> for RatVec {
    fn index_mut(&mut self, index: usize) -> &mut Rat {
        &mut self.entries[index]
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.dim(), rhs.dim(), "vector addition dimension mismatch");
        RatVec {
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        assert_eq!(
            self.dim(),
            rhs.dim(),
            "vector subtraction dimension mismatch"
        );
        RatVec {
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl FromIterator<Rat> for RatVec {
    fn from_iter<T: IntoIterator<Item = Rat>>(iter: T) -> Self {
        RatVec {
            entries: iter.into_iter().collect(),
        }
    }
}
