use std::collections::HashSet;
use std::fmt;

use super::vector::FinVector;
use crate::error::{Error, Result};

/// `Lin(b, P) = { b + Σ λ_p·p : λ ∈ ℕ^P }`.
///
/// Periods are kept sorted, without duplicates and without the zero vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearSet {
    base: FinVector,
    periods: Vec<FinVector>,
}

impl LinearSet {
    pub fn new(base: FinVector, periods: impl IntoIterator<Item = FinVector>) -> Result<Self> {
        let dim = base.dim();
        let mut ps = Vec::new();
        for p in periods {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if !p.is_zero() {
                ps.push(p);
            }
        }
        ps.sort();
        ps.dedup();
        Ok(LinearSet { base, periods: ps })
    }

    pub fn singleton(base: FinVector) -> Self {
        LinearSet {
            base,
            periods: Vec::new(),
        }
    }

    pub fn base(&self) -> &FinVector {
        &self.base
    }

    pub fn periods(&self) -> &[FinVector] {
        &self.periods
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn contains(&self, v: &FinVector) -> bool {
        match v.checked_sub(&self.base) {
            Some(w) => in_span(&w, &self.periods),
            None => false,
        }
    }

    /// Sufficient test for `self ⊆ other`: the base lies in `other` and every
    /// period is an ℕ-combination of `other`'s periods.
    pub fn syntactically_within(&self, other: &LinearSet) -> bool {
        other.contains(&self.base) && self.periods.iter().all(|p| in_span(p, &other.periods))
    }

    /// The same set with every period that is an ℕ-combination of the
    /// remaining ones removed, larger periods first.
    pub fn without_redundant_periods(&self) -> LinearSet {
        let mut order: Vec<usize> = (0..self.periods.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse((self.periods[i].sum(), i)));
        let mut keep = vec![true; self.periods.len()];
        for i in order {
            let others: Vec<FinVector> = (0..self.periods.len())
                .filter(|&j| j != i && keep[j])
                .map(|j| self.periods[j].clone())
                .collect();
            if in_span(&self.periods[i], &others) {
                keep[i] = false;
            }
        }
        LinearSet {
            base: self.base.clone(),
            periods: self
                .periods
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(p, _)| p.clone())
                .collect(),
        }
    }

    /// Whether the set is all of `ℕ^d`.
    pub fn is_full(&self) -> bool {
        self.base.is_zero()
            && (0..self.dim()).all(|i| in_span(&FinVector::unit(self.dim(), i), &self.periods))
    }

    /// Applies `f` to the base and each period.
    pub fn map(&self, f: impl Fn(&FinVector) -> FinVector) -> LinearSet {
        LinearSet::new(f(&self.base), self.periods.iter().map(&f)).expect("uniform dimension")
    }
}

/// Whether `w` is an ℕ-combination of `periods`.
pub(crate) fn in_span(w: &FinVector, periods: &[FinVector]) -> bool {
    fn go(
        w: &FinVector,
        periods: &[FinVector],
        i: usize,
        failed: &mut HashSet<(FinVector, usize)>,
    ) -> bool {
        if w.is_zero() {
            return true;
        }
        if i == periods.len() || failed.contains(&(w.clone(), i)) {
            return false;
        }
        let mut cur = w.clone();
        loop {
            if go(&cur, periods, i + 1, failed) {
                return true;
            }
            match cur.checked_sub(&periods[i]) {
                Some(next) => cur = next,
                None => break,
            }
        }
        failed.insert((w.clone(), i));
        false
    }
    go(w, periods, 0, &mut HashSet::new())
}

/// Finite union of linear sets of a fixed dimension.
///
/// Components are kept sorted and duplicate-free, so equal representations
/// compare equal. The empty union denotes ∅.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemilinearSet {
    dim: usize,
    components: Vec<LinearSet>,
}

impl SemilinearSet {
    pub fn new(dim: usize, components: impl IntoIterator<Item = LinearSet>) -> Result<Self> {
        let mut cs = Vec::new();
        for c in components {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.dim(),
                });
            }
            cs.push(c);
        }
        cs.sort();
        cs.dedup();
        Ok(SemilinearSet {
            dim,
            components: cs,
        })
    }

    pub fn empty(dim: usize) -> Self {
        SemilinearSet {
            dim,
            components: Vec::new(),
        }
    }

    /// All of `ℕ^dim`.
    pub fn full(dim: usize) -> Self {
        let periods = (0..dim).map(|i| FinVector::unit(dim, i));
        SemilinearSet {
            dim,
            components: vec![LinearSet::new(FinVector::zero(dim), periods).expect("uniform")],
        }
    }

    pub fn linear(set: LinearSet) -> Self {
        SemilinearSet {
            dim: set.dim(),
            components: vec![set],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[LinearSet] {
        &self.components
    }

    pub fn into_components(self) -> Vec<LinearSet> {
        self.components
    }

    /// Every linear set is nonempty, so this is exact.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn union(&self, other: &SemilinearSet) -> Result<SemilinearSet> {
        self.check_dim(other.dim)?;
        SemilinearSet::new(
            self.dim,
            self.components.iter().chain(&other.components).cloned(),
        )
    }

    pub fn contains(&self, v: &FinVector) -> Result<bool> {
        self.check_dim(v.dim())?;
        Ok(self.components.iter().any(|c| c.contains(v)))
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            });
        }
        Ok(())
    }

    /// Removes redundant periods, drops components syntactically contained
    /// in another component and merges `Lin(b, P) ∪ Lin(b + p, P ∪ {p})`
    /// into `Lin(b, P ∪ {p})`.
    pub fn simplified(&self) -> SemilinearSet {
        let reduced = SemilinearSet::new(
            self.dim,
            self.components
                .iter()
                .map(LinearSet::without_redundant_periods),
        )
        .expect("uniform dimension");
        let mut cur = reduced.drop_subsumed();
        while let Some(next) = cur.merge_once() {
            cur = next.drop_subsumed();
        }
        cur
    }

    fn merge_once(&self) -> Option<SemilinearSet> {
        let cs = &self.components;
        for i in 0..cs.len() {
            for j in 0..cs.len() {
                let (a, b) = (&cs[i], &cs[j]);
                if b.periods.len() != a.periods.len() + 1 {
                    continue;
                }
                let Some(p) = b.base.checked_sub(&a.base) else {
                    continue;
                };
                if !b.periods.contains(&p) || !a.periods.iter().all(|q| b.periods.contains(q)) {
                    continue;
                }
                if a.periods.contains(&p) {
                    continue;
                }
                let merged = LinearSet {
                    base: a.base.clone(),
                    periods: b.periods.clone(),
                };
                let rest = cs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i && *k != j)
                    .map(|(_, c)| c.clone())
                    .chain(std::iter::once(merged));
                return Some(SemilinearSet::new(self.dim, rest).expect("uniform dimension"));
            }
        }
        None
    }

    fn drop_subsumed(&self) -> SemilinearSet {
        let cs = &self.components;
        let mut keep = vec![true; cs.len()];
        for i in 0..cs.len() {
            for j in 0..cs.len() {
                if i != j && keep[j] && cs[i].syntactically_within(&cs[j]) {
                    // on mutual containment the earlier one survives
                    if !(j > i && cs[j].syntactically_within(&cs[i])) {
                        keep[i] = false;
                        break;
                    }
                }
            }
        }
        SemilinearSet {
            dim: self.dim,
            components: cs
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(c, _)| c.clone())
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&FinVector) -> FinVector, dim: usize) -> Result<SemilinearSet> {
        SemilinearSet::new(dim, self.components.iter().map(|c| c.map(&f)))
    }
}

/// `v ∈ s`.
pub fn sl_membership(v: &FinVector, s: &SemilinearSet) -> Result<bool> {
    s.contains(v)
}

impl fmt::Display for LinearSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lin({},{{", self.base)?;
        for (i, p) in self.periods.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}})")
    }
}

impl fmt::Display for SemilinearSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
