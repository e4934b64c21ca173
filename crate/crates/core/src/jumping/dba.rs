use crate::automata::algebra::product;
use crate::automata::{Alphabet, Automaton, BuchiAutomaton, Builder, Letter, Nfa};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::masked::{Mask, MaskedSemilinearSet};
use crate::semilinear::{FinVector, SemilinearSet};

/// `a^{v_a} b^{v_b} …` in alphabet order.
pub fn representative_word(v: &FinVector) -> Vec<Letter> {
    v.iter()
        .enumerate()
        .flat_map(|(l, &n)| std::iter::repeat_n(l, n as usize))
        .collect()
}

/// Deterministic Büchi automaton whose jumping language has Parikh image `m`.
///
/// For every mask, the linear components `Lin(b, Q ∪ E𝔪)` contribute the
/// finite-word language `w_b·(w_q₁ + … + w_qₙ)*`; their union is determinized
/// and every accepting state gets an edge on the first letter `σ₁` of `w_E`
/// into a cycle spelling `w_E` (the letters of `𝔪|∞` in alphabet order). The
/// finite part never reads `σ₁`, so this keeps the automaton deterministic.
/// The per-mask automata are completed and combined by a synchronous product
/// that accepts when any component does.
pub fn masked_to_dba(m: &MaskedSemilinearSet, limits: &Limits) -> Result<BuchiAutomaton> {
    let m = m.canonicalize();
    let alphabet = m.alphabet().clone();
    let mut acc: Option<Automaton> = None;
    for mask in m.masks() {
        let part = mask_automaton(&alphabet, mask, m.get(mask).expect("listed mask"), limits)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => {
                let p = product(&prev, &part, |x, y| x || y).reduce();
                if p.num_states() > limits.states {
                    return Err(Error::ResourceCap {
                        what: "automaton states",
                        cap: limits.states,
                    });
                }
                p
            }
        });
    }
    Ok(BuchiAutomaton::new(
        acc.unwrap_or_else(|| rejecting(&alphabet)),
    ))
}

fn rejecting(alphabet: &Alphabet) -> Automaton {
    let mut b = Builder::new(alphabet.clone());
    let q = b.add_state("reject");
    b.set_initial(q);
    for l in alphabet.iter() {
        b.add_transition(q, l, q);
    }
    b.build()
}

fn mask_automaton(
    alphabet: &Alphabet,
    mask: &Mask,
    s: &SemilinearSet,
    limits: &Limits,
) -> Result<Automaton> {
    // finite part: union of w_b·(Σ w_q)* over the components
    let mut b = Builder::new(alphabet.clone());
    for c in s.components() {
        let mut cur = b.add_state(format!("b{}", b.num_states()));
        b.set_initial(cur);
        for l in representative_word(c.base()) {
            let next = b.add_state(format!("b{}", b.num_states()));
            b.add_transition(cur, l, next);
            cur = next;
        }
        let hub = cur;
        b.set_accepting(hub);
        for p in c
            .periods()
            .iter()
            .filter(|p| mask.inf_letters().all(|i| p[i] == 0))
        {
            let word = representative_word(p);
            let mut cur = hub;
            for (i, &l) in word.iter().enumerate() {
                let next = if i + 1 == word.len() {
                    hub
                } else {
                    b.add_state(format!("p{}", b.num_states()))
                };
                b.add_transition(cur, l, next);
                cur = next;
            }
        }
    }
    let finite = Nfa::new(b.build()).determinize(limits)?;
    if finite.num_states() > limits.states {
        return Err(Error::ResourceCap {
            what: "automaton states",
            cap: limits.states,
        });
    }

    // copy the deterministic finite part, rerouting σ₁ at accepting states
    let w_e: Vec<Letter> = mask.inf_letters().collect();
    let sigma1 = w_e[0];
    let mut d = Builder::new(alphabet.clone());
    for q in finite.states() {
        d.add_state(finite.name(q));
    }
    for &q in finite.initial() {
        d.set_initial(q);
    }
    let cycle: Vec<usize> = (0..w_e.len())
        .map(|i| d.add_state(format!("e{i}")))
        .collect();
    for (q, l, p) in finite.transitions() {
        if !(l == sigma1 && finite.is_accepting(q)) {
            d.add_transition(q, l, p);
        }
    }
    for &f in finite.accepting() {
        d.add_transition(f, sigma1, cycle[0]);
    }
    // cycle[i] has just read w_e[i]
    for i in 0..cycle.len() {
        let j = (i + 1) % cycle.len();
        d.add_transition(cycle[i], w_e[j], cycle[j]);
        d.set_accepting(cycle[i]);
    }
    Ok(d.build().completed().reduce())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{buchi_accepts, Alphabet};
    use crate::semilinear::LinearSet;

    fn four_letter_canonical() -> MaskedSemilinearSet {
        let s = SemilinearSet::linear(
            LinearSet::new(
                [1, 0, 9, 4].into(),
                [[1, 2, 5, 7].into(), [1, 0, 1, 3].into()],
            )
            .unwrap(),
        );
        let m = Mask::new(vec![false, false, true, true]).unwrap();
        MaskedSemilinearSet::new(Alphabet::from_str_letters("abcd").unwrap(), [(m, s)])
            .unwrap()
            .canonicalize()
    }

    #[test]
    fn dba_shape() {
        let d = masked_to_dba(&four_letter_canonical(), &Limits::default()).unwrap();
        assert!(d.is_deterministic());
        assert!(buchi_accepts(&d, "a;cd").unwrap());
        assert!(buchi_accepts(&d, "aabb;cd").unwrap());
        assert!(buchi_accepts(&d, "aabbaa;cd").unwrap());
        assert!(!buchi_accepts(&d, "abab;cd").unwrap());
        assert!(!buchi_accepts(&d, ";cd").unwrap());
        assert!(!buchi_accepts(&d, "a;c").unwrap());
    }

    #[test]
    fn empty_set_rejects() {
        let e = MaskedSemilinearSet::empty(Alphabet::from_str_letters("ab").unwrap());
        let d = masked_to_dba(&e, &Limits::default()).unwrap();
        assert!(d.is_deterministic());
        assert!(crate::automata::buchi_emptiness(&d).is_none());
    }

    #[test]
    fn representative_words_in_alphabet_order() {
        assert_eq!(
            representative_word(&FinVector::from([1, 2, 0, 1])),
            vec![0, 1, 1, 3]
        );
    }
}
