use std::fmt;
use std::ops::{Deref, Index};

/// A vector of naturals, one entry per alphabet letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinVector(Vec<u64>);

impl FinVector {
    pub fn new(values: Vec<u64>) -> Self {
        FinVector(values)
    }

    pub fn zero(dim: usize) -> Self {
        FinVector(vec![0; dim])
    }

    /// The unit vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        FinVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &FinVector) -> FinVector {
        FinVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u64) -> FinVector {
        FinVector(self.0.iter().map(|a| a * k).collect())
    }

    /// `self - other` when `other ≤ self` componentwise.
    pub fn checked_sub(&self, other: &FinVector) -> Option<FinVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(FinVector)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &FinVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Same vector with the coordinates outside `keep` set to zero.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> FinVector {
        FinVector(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &x)| if keep(i) { x } else { 0 })
                .collect(),
        )
    }
}

impl Deref for FinVector {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl Index<usize> for FinVector {
    type Output = u64;
    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl From<Vec<u64>> for FinVector {
    fn from(v: Vec<u64>) -> Self {
        FinVector(v)
    }
}

impl<const N: usize> From<[u64; N]> for FinVector {
    fn from(v: [u64; N]) -> Self {
        FinVector(v.to_vec())
    }
}

impl FromIterator<u64> for FinVector {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        FinVector(iter.into_iter().collect())
    }
}

impl fmt::Display for FinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
