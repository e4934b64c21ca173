use std::collections::BTreeMap;
use std::fmt;

use super::mask::{ExtVector, Mask};
use crate::automata::Alphabet;
use crate::error::{Error, Result};
use crate::semilinear::{FinVector, LinearSet, SemilinearSet};

/// `⋃_𝔪 S𝔪 + 𝔪`, a subset of `𝕄^Σ`.
///
/// Masks absent from the map stand for `S𝔪 = ∅`. Components are stored over
/// the full alphabet; `x + 𝔪` overwrites the coordinates in `𝔪|∞` with `∞`,
/// so whatever a component says about those coordinates is irrelevant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskedSemilinearSet {
    alphabet: Alphabet,
    components: BTreeMap<Mask, SemilinearSet>,
    canonical: bool,
}

impl MaskedSemilinearSet {
    /// Builds a set; repeated masks are merged by union.
    pub fn new(
        alphabet: Alphabet,
        parts: impl IntoIterator<Item = (Mask, SemilinearSet)>,
    ) -> Result<Self> {
        let d = alphabet.len();
        let mut components: BTreeMap<Mask, SemilinearSet> = BTreeMap::new();
        for (m, s) in parts {
            if m.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: m.dim(),
                });
            }
            s.check_dim(d)?;
            let merged = match components.remove(&m) {
                Some(prev) => prev.union(&s)?,
                None => s,
            };
            components.insert(m, merged);
        }
        let mut out = MaskedSemilinearSet {
            alphabet,
            components,
            canonical: false,
        };
        out.canonical = out.satisfies_canonical_form();
        Ok(out)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        MaskedSemilinearSet {
            alphabet,
            components: BTreeMap::new(),
            canonical: true,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.alphabet.len()
    }

    pub fn components(&self) -> &BTreeMap<Mask, SemilinearSet> {
        &self.components
    }

    pub fn get(&self, m: &Mask) -> Option<&SemilinearSet> {
        self.components.get(m)
    }

    /// Set once the representation is known to be in canonical oblivious form.
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// True when every component is empty.
    pub fn is_empty(&self) -> bool {
        self.components.values().all(SemilinearSet::is_empty)
    }

    /// Masks whose component is nonempty.
    pub fn masks(&self) -> impl Iterator<Item = &Mask> {
        self.components
            .iter()
            .filter(|(_, s)| !s.is_empty())
            .map(|(m, _)| m)
    }

    /// Syntactic test of the canonical oblivious form: every linear component
    /// has a base zero on `𝔪|∞`, periods that are either zero on `𝔪|∞` or a
    /// unit vector of `E𝔪`, and contains all of `E𝔪`.
    pub fn satisfies_canonical_form(&self) -> bool {
        self.components.iter().all(|(m, s)| {
            let units = m.unit_periods();
            s.components().iter().all(|c| {
                let zero_on_inf = |v: &FinVector| m.inf_letters().all(|i| v[i] == 0);
                zero_on_inf(c.base())
                    && c.periods()
                        .iter()
                        .all(|p| zero_on_inf(p) || units.contains(p))
                    && units.iter().all(|e| c.periods().contains(e))
            })
        })
    }

    /// Equivalent set in canonical oblivious form.
    ///
    /// Zeroes the `𝔪|∞` coordinates of every base and period and adjoins
    /// `E𝔪` to every linear component.
    pub fn canonicalize(&self) -> MaskedSemilinearSet {
        if self.canonical {
            return self.clone();
        }
        let components = self
            .components
            .iter()
            .map(|(m, s)| (m.clone(), canonical_component(m, s)))
            .collect();
        MaskedSemilinearSet {
            alphabet: self.alphabet.clone(),
            components,
            canonical: true,
        }
    }

    /// Canonical component for `m`, projected onto the coordinates `𝔪|₀`.
    ///
    /// Absent masks give the empty set.
    pub fn projected(&self, m: &Mask) -> SemilinearSet {
        let k = m.finite_count();
        match self.components.get(m) {
            None => SemilinearSet::empty(k),
            Some(s) => s.map(|v| m.project(v), k).expect("projection is uniform"),
        }
    }

    /// Builds a canonical set from components given over `𝔪|₀` coordinates.
    pub(crate) fn from_projected(
        alphabet: Alphabet,
        parts: impl IntoIterator<Item = (Mask, SemilinearSet)>,
    ) -> MaskedSemilinearSet {
        let components = parts
            .into_iter()
            .map(|(m, s)| {
                let lifted = lift_component(&m, &s);
                (m, lifted)
            })
            .collect();
        MaskedSemilinearSet {
            alphabet,
            components,
            canonical: true,
        }
    }

    pub fn contains(&self, x: &ExtVector) -> Result<bool> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        let (v, m) = x.decompose();
        Ok(match self.components.get(&m) {
            None => false,
            Some(s) => s.components().iter().any(|c| {
                let c = canonical_linear(&m, c);
                c.contains(&v)
            }),
        })
    }

    /// Drops empty components.
    pub fn pruned(&self) -> MaskedSemilinearSet {
        MaskedSemilinearSet {
            alphabet: self.alphabet.clone(),
            components: self
                .components
                .iter()
                .filter(|(_, s)| !s.is_empty())
                .map(|(m, s)| (m.clone(), s.clone()))
                .collect(),
            canonical: self.canonical,
        }
    }
}

fn canonical_linear(m: &Mask, c: &LinearSet) -> LinearSet {
    LinearSet::new(
        m.zero_masked(c.base()),
        c.periods()
            .iter()
            .map(|p| m.zero_masked(p))
            .chain(m.unit_periods()),
    )
    .expect("uniform dimension")
}

fn canonical_component(m: &Mask, s: &SemilinearSet) -> SemilinearSet {
    SemilinearSet::new(
        s.dim(),
        s.components().iter().map(|c| canonical_linear(m, c)),
    )
    .expect("uniform dimension")
    .simplified()
}

fn lift_component(m: &Mask, s: &SemilinearSet) -> SemilinearSet {
    SemilinearSet::new(
        m.dim(),
        s.components().iter().map(|c| {
            LinearSet::new(
                m.lift(c.base()),
                c.periods()
                    .iter()
                    .map(|p| m.lift(p))
                    .chain(m.unit_periods()),
            )
            .expect("uniform dimension")
        }),
    )
    .expect("uniform dimension")
}

impl fmt::Display for MaskedSemilinearSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self
            .components
            .iter()
            .filter(|(_, s)| !s.is_empty())
            .collect();
        if parts.is_empty() {
            return write!(f, "∅");
        }
        for (i, (m, s)) in parts.into_iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "[{s}] + {m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::masked::Ext;

    fn abcd() -> Alphabet {
        Alphabet::from_str_letters("abcd").unwrap()
    }

    fn four_letter() -> MaskedSemilinearSet {
        let s = SemilinearSet::linear(
            LinearSet::new(
                [1, 0, 9, 4].into(),
                [[1, 2, 5, 7].into(), [1, 0, 1, 3].into()],
            )
            .unwrap(),
        );
        let m = Mask::new(vec![false, false, true, true]).unwrap();
        MaskedSemilinearSet::new(abcd(), [(m, s)]).unwrap()
    }

    fn ext(v: &[Option<u64>]) -> ExtVector {
        ExtVector::new(v.iter().map(|x| x.map_or(Ext::Inf, Ext::Fin)).collect()).unwrap()
    }

    #[test]
    fn four_letter_canonical_form() {
        let raw = four_letter();
        assert!(!raw.is_canonical());
        let c = raw.canonicalize();
        assert!(c.is_canonical() && c.satisfies_canonical_form());
        let m = Mask::new(vec![false, false, true, true]).unwrap();
        let want = LinearSet::new(
            [1, 0, 0, 0].into(),
            [
                [1, 2, 0, 0].into(),
                [1, 0, 0, 0].into(),
                [0, 0, 1, 0].into(),
                [0, 0, 0, 1].into(),
            ],
        )
        .unwrap();
        assert_eq!(c.get(&m).unwrap().components(), &[want]);
    }

    #[test]
    fn four_letter_membership() {
        let c = four_letter().canonicalize();
        assert!(c.contains(&ext(&[Some(2), Some(2), None, None])).unwrap());
        assert!(!c.contains(&ext(&[Some(0), Some(0), None, None])).unwrap());
        assert!(!c
            .contains(&ext(&[Some(2), Some(2), Some(5), None]))
            .unwrap());
        // the raw representation answers the same
        assert!(four_letter()
            .contains(&ext(&[Some(2), Some(2), None, None]))
            .unwrap());
    }

    #[test]
    fn single_point_canonicalized() {
        let m = Mask::new(vec![false, false, true, true]).unwrap();
        let s = SemilinearSet::linear(LinearSet::singleton([1, 0, 3, 0].into()));
        let c = MaskedSemilinearSet::new(abcd(), [(m.clone(), s)])
            .unwrap()
            .canonicalize();
        let want = LinearSet::new(
            [1, 0, 0, 0].into(),
            [[0, 0, 1, 0].into(), [0, 0, 0, 1].into()],
        )
        .unwrap();
        assert_eq!(c.get(&m).unwrap().components(), &[want]);
    }

    #[test]
    fn empty_map_stays_empty() {
        let e = MaskedSemilinearSet::empty(abcd());
        assert!(e.canonicalize().components().is_empty());
        assert!(e.is_empty());
    }
}
