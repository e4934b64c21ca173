use std::fmt;

use crate::error::{Error, Result};
use crate::semilinear::FinVector;

/// A vector in `{0, ∞}^Σ` with at least one `∞`.
///
/// `inf[i]` is true when letter `i` carries `∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mask {
    inf: Vec<bool>,
}

impl Mask {
    pub fn new(inf: Vec<bool>) -> Result<Self> {
        if !inf.iter().any(|&b| b) {
            return Err(Error::InvalidSet(
                "a mask needs at least one infinite letter".into(),
            ));
        }
        Ok(Mask { inf })
    }

    /// The mask whose infinite letters are `letters`.
    pub fn from_letters(dim: usize, letters: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut inf = vec![false; dim];
        for l in letters {
            if l >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: l + 1,
                });
            }
            inf[l] = true;
        }
        Mask::new(inf)
    }

    /// Every mask over `dim` letters, ordered by bit pattern (letter 0 lowest).
    pub fn all(dim: usize) -> impl Iterator<Item = Mask> {
        (1u64..(1u64 << dim)).map(move |bits| Mask {
            inf: (0..dim).map(|i| bits >> i & 1 == 1).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.inf.len()
    }

    pub fn is_inf(&self, i: usize) -> bool {
        self.inf[i]
    }

    /// The letters `𝔪|∞`.
    pub fn inf_letters(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.inf.len()).filter(|&i| self.inf[i])
    }

    /// The letters `𝔪|₀`.
    pub fn finite_letters(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.inf.len()).filter(|&i| !self.inf[i])
    }

    pub fn finite_count(&self) -> usize {
        self.inf.iter().filter(|&&b| !b).count()
    }

    /// `E𝔪 = { e_σ : σ ∈ 𝔪|∞ }`.
    pub fn unit_periods(&self) -> Vec<FinVector> {
        self.inf_letters()
            .map(|i| FinVector::unit(self.dim(), i))
            .collect()
    }

    /// `v|𝔪`: the coordinates in `𝔪|∞` set to zero.
    pub fn zero_masked(&self, v: &FinVector) -> FinVector {
        v.restrict(|i| !self.inf[i])
    }

    /// The coordinates of `v` in `𝔪|₀`, in alphabet order.
    pub fn project(&self, v: &FinVector) -> FinVector {
        self.finite_letters().map(|i| v[i]).collect()
    }

    /// Inverse of [`Mask::project`], zero on `𝔪|∞`.
    pub fn lift(&self, v: &FinVector) -> FinVector {
        let mut out = vec![0; self.dim()];
        for (k, i) in self.finite_letters().enumerate() {
            out[i] = v[k];
        }
        FinVector::new(out)
    }

    pub fn bits(&self) -> &[bool] {
        &self.inf
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &b) in self.inf.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if b { "∞" } else { "0" })?;
        }
        write!(f, ")")
    }
}

/// An entry of `ℕ ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    Fin(u64),
    Inf,
}

/// A vector of `𝕄^Σ`: extended naturals with at least one `∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtVector(Vec<Ext>);

impl ExtVector {
    pub fn new(values: Vec<Ext>) -> Result<Self> {
        if !values.contains(&Ext::Inf) {
            return Err(Error::InvalidSet(
                "an extended vector needs an infinite coordinate".into(),
            ));
        }
        Ok(ExtVector(values))
    }

    /// `x ⊕ 𝔪`.
    pub fn compose(x: &FinVector, mask: &Mask) -> Self {
        ExtVector(
            (0..mask.dim())
                .map(|i| {
                    if mask.is_inf(i) {
                        Ext::Inf
                    } else {
                        Ext::Fin(x[i])
                    }
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[Ext] {
        &self.0
    }

    /// The unique `x ⊕ 𝔪` split with `x` zero on `𝔪|∞`.
    pub fn decompose(&self) -> (FinVector, Mask) {
        let x = self
            .0
            .iter()
            .map(|e| match e {
                Ext::Fin(n) => *n,
                Ext::Inf => 0,
            })
            .collect();
        let mask = Mask {
            inf: self.0.iter().map(|e| *e == Ext::Inf).collect(),
        };
        (x, mask)
    }
}

impl fmt::Display for ExtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                Ext::Fin(n) => write!(f, "{n}")?,
                Ext::Inf => write!(f, "∞")?,
            }
        }
        write!(f, ")")
    }
}
