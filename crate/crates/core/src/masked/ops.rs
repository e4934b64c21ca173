//! Mask-wise Boolean operations.
//!
//! In canonical oblivious form a component only constrains the coordinates in
//! `𝔪|₀`, so every operation runs on the projection of each component to
//! those coordinates and lifts the answer back.

use super::mask::{ExtVector, Mask};
use super::set::MaskedSemilinearSet;
use crate::error::Result;
use crate::limits::Limits;
use crate::presburger::{decide_sentence, semilinear_to_formula, Formula, Term, Var};
use crate::semilinear::{sl_complement, sl_inclusion, sl_intersect, SemilinearSet};

/// Equivalent set in canonical oblivious form.
pub fn canonicalize(m: &MaskedSemilinearSet) -> MaskedSemilinearSet {
    m.canonicalize()
}

/// `x ∈ m`.
pub fn masked_membership(x: &ExtVector, m: &MaskedSemilinearSet) -> Result<bool> {
    m.contains(x)
}

pub fn masked_intersect(
    a: &MaskedSemilinearSet,
    b: &MaskedSemilinearSet,
    limits: &Limits,
) -> Result<MaskedSemilinearSet> {
    a.alphabet().ensure_same(b.alphabet())?;
    let (a, b) = (a.canonicalize(), b.canonicalize());
    let mut parts = Vec::new();
    for m in a.masks() {
        if b.get(m).is_none_or(SemilinearSet::is_empty) {
            continue;
        }
        let s = sl_intersect(&a.projected(m), &b.projected(m), limits)?;
        if !s.is_empty() {
            parts.push((m.clone(), s));
        }
    }
    Ok(MaskedSemilinearSet::from_projected(
        a.alphabet().clone(),
        parts,
    ))
}

pub fn masked_union(
    a: &MaskedSemilinearSet,
    b: &MaskedSemilinearSet,
) -> Result<MaskedSemilinearSet> {
    a.alphabet().ensure_same(b.alphabet())?;
    let (a, b) = (a.canonicalize(), b.canonicalize());
    let mut masks: Vec<&Mask> = a.masks().chain(b.masks()).collect();
    masks.sort();
    masks.dedup();
    let parts = masks
        .into_iter()
        .map(|m| {
            let s = a
                .projected(m)
                .union(&b.projected(m))
                .expect("same projection")
                .simplified();
            (m.clone(), s)
        })
        .collect::<Vec<_>>();
    Ok(MaskedSemilinearSet::from_projected(
        a.alphabet().clone(),
        parts,
    ))
}

/// `𝕄^Σ ∖ m`; every mask is materialized, possibly with an empty component.
pub fn masked_complement(m: &MaskedSemilinearSet, limits: &Limits) -> Result<MaskedSemilinearSet> {
    let m = m.canonicalize();
    let mut parts = Vec::new();
    for mask in Mask::all(m.dim()) {
        let s = sl_complement(&m.projected(&mask), limits)?;
        parts.push((mask, s));
    }
    Ok(MaskedSemilinearSet::from_projected(
        m.alphabet().clone(),
        parts,
    ))
}

/// `a ⊆ b`, decided mask by mask.
pub fn masked_inclusion(
    a: &MaskedSemilinearSet,
    b: &MaskedSemilinearSet,
    limits: &Limits,
) -> Result<bool> {
    a.alphabet().ensure_same(b.alphabet())?;
    let (a, b) = (a.canonicalize(), b.canonicalize());
    for m in a.masks() {
        if !sl_inclusion(&a.projected(m), &b.projected(m), limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn masked_equivalent(
    a: &MaskedSemilinearSet,
    b: &MaskedSemilinearSet,
    limits: &Limits,
) -> Result<bool> {
    Ok(masked_inclusion(a, b, limits)? && masked_inclusion(b, a, limits)?)
}

/// Whether membership in `s` ignores the coordinates in `𝔪|∞`:
/// `∀u, v. u|₀ = v|₀ → (u ∈ s ↔ v ∈ s)`.
pub fn is_oblivious(s: &SemilinearSet, mask: &Mask, limits: &Limits) -> Result<bool> {
    let d = s.dim();
    let phi = semilinear_to_formula(s);
    let shift_bound = |v: Var| {
        if (v.0 as usize) < d {
            v
        } else {
            Var(v.0 + 2 * d as u32)
        }
    };
    let in_u = phi.rename(&shift_bound);
    let in_v = phi.rename(&|v: Var| {
        if (v.0 as usize) < d {
            Var(v.0 + d as u32)
        } else {
            Var(v.0 + 2 * d as u32)
        }
    });
    let agree = Formula::and(
        mask.finite_letters()
            .map(|i| Formula::eq(Term::var(Var(i as u32)), Term::var(Var((i + d) as u32))))
            .collect(),
    );
    let same = Formula::and(vec![in_u.clone().implies(in_v.clone()), in_v.implies(in_u)]);
    let sentence = Formula::forall_all((0..2 * d).map(|i| Var(i as u32)), agree.implies(same));
    decide_sentence(&sentence, limits)
}
