use std::collections::BTreeMap;

use crate::automata::algebra::{contains_letter, intersection, restrict};
use crate::automata::{BuchiAutomaton, Letter, Nfa, State, UpWord};
use crate::error::Result;
use crate::limits::Limits;
use crate::masked::{Ext, ExtVector, Mask, MaskedSemilinearSet};
use crate::semilinear::parikh_of_nfa;

/// `I(t)`: the masks `𝔪_Γ` such that every letter of `Γ` occurs in some
/// word of `L(t) ∩ Γ*`.
pub fn compute_mask_set(t: &Nfa) -> Vec<Mask> {
    let d = t.alphabet().len();
    let mut out = Vec::new();
    for m in Mask::all(d) {
        let gamma: Vec<Letter> = m.inf_letters().collect();
        let restricted = restrict(t, &gamma);
        let ok = gamma.iter().all(|&sigma| {
            let witness = contains_letter(t.alphabet(), sigma);
            !intersection(&restricted, &witness)
                .expect("same alphabet")
                .is_empty()
        });
        if ok {
            out.push(m);
        }
    }
    out
}

/// `Ψ(J(a))` as a canonical masked semilinear set.
///
/// With `L(a) = ⋃_{q∈α} S_q·T_q^ω`, the component for mask `𝔪` is
/// `⋃ { Ψ(S_q·T_q*) : 𝔪 ∈ I(T_q) }`. Since every word of `S_q·T_q*` already
/// ends in `q`, `S_q·T_q* = S_q`, so each mask needs a single Parikh image of
/// `a` read as a finite-word automaton accepting at the states grouped under
/// that mask.
pub fn jumping_parikh(a: &BuchiAutomaton, limits: &Limits) -> Result<MaskedSemilinearSet> {
    let mut groups: BTreeMap<Mask, Vec<State>> = BTreeMap::new();
    for &q in a.accepting() {
        let t = Nfa::new(a.with_sets([q], [q]));
        for m in compute_mask_set(&t) {
            groups.entry(m).or_default().push(q);
        }
    }
    let reachable = a.reachable_from(a.initial().iter().copied());
    let mut parts = Vec::new();
    for (m, states) in groups {
        if !states.iter().any(|q| reachable.contains(q)) {
            continue;
        }
        let s = Nfa::new(a.with_sets(a.initial().iter().copied(), states));
        let image = parikh_of_nfa(&s, limits)?;
        if !image.is_empty() {
            parts.push((m, image));
        }
    }
    Ok(MaskedSemilinearSet::new(a.alphabet().clone(), parts)?.canonicalize())
}

/// `Ψ(u·v^ω)`: `∞` on the letters of `v`, counts from `u` elsewhere.
pub fn parikh_of_up(w: &UpWord, dim: usize) -> ExtVector {
    let mut values = vec![Ext::Fin(0); dim];
    for &l in w.prefix() {
        if let Ext::Fin(n) = values[l] {
            values[l] = Ext::Fin(n + 1);
        }
    }
    for &l in w.period() {
        values[l] = Ext::Inf;
    }
    ExtVector::new(values).expect("a nonempty period gives an infinite letter")
}

/// `u·v^ω ∈ J(a)`.
pub fn jumping_member_up(a: &BuchiAutomaton, w: &UpWord, limits: &Limits) -> Result<bool> {
    let image = jumping_parikh(a, limits)?;
    image.contains(&parikh_of_up(w, a.alphabet().len()))
}
