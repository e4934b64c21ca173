//! Regular operations on finite-word automata.
//!
//! None of the constructions introduce ε-transitions; concatenation and star
//! splice the outgoing transitions of the initial states into the accepting
//! states instead.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::alphabet::Letter;
use super::automaton::{Automaton, Builder, Nfa, State};
use crate::error::{Error, Result};

/// The operations offered by [`nfa_algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NfaOp {
    Union,
    Concat,
    Star,
    Intersection,
    RestrictAlphabet,
}

impl NfaOp {
    fn name(self) -> &'static str {
        match self {
            NfaOp::Union => "union",
            NfaOp::Concat => "concat",
            NfaOp::Star => "star",
            NfaOp::Intersection => "product-intersection",
            NfaOp::RestrictAlphabet => "restrict-alphabet",
        }
    }
}

/// Dispatches to the individual constructions.
///
/// `gamma` is only read by [`NfaOp::RestrictAlphabet`]; `b` is required by the
/// binary operations.
pub fn nfa_algebra(op: NfaOp, a: &Nfa, b: Option<&Nfa>, gamma: Option<&[Letter]>) -> Result<Nfa> {
    let second = || b.ok_or(Error::MissingOperand(op.name()));
    match op {
        NfaOp::Union => union(a, second()?),
        NfaOp::Concat => concat(a, second()?),
        NfaOp::Star => Ok(star(a)),
        NfaOp::Intersection => intersection(a, second()?),
        NfaOp::RestrictAlphabet => {
            let gamma = gamma.ok_or(Error::MissingOperand(op.name()))?;
            for &l in gamma {
                if l >= a.alphabet().len() {
                    return Err(Error::AlphabetMismatch(format!(
                        "letter index {l} out of range"
                    )));
                }
            }
            Ok(restrict(a, gamma))
        }
    }
}

/// Copies every state of `a` into `b`, named `{tag}{i}`; returns the index offset.
fn copy_into(b: &mut Builder, a: &Automaton, tag: &str) -> State {
    let offset = b.num_states();
    for q in a.states() {
        b.add_state(format!("{tag}{q}"));
    }
    for (q, l, p) in a.transitions() {
        b.add_transition(offset + q, l, offset + p);
    }
    offset
}

pub fn union(a: &Nfa, other: &Nfa) -> Result<Nfa> {
    a.alphabet().ensure_same(other.alphabet())?;
    Ok(Nfa::new(disjoint_union(a, other)))
}

/// Side-by-side copy of both automata; states are renamed `l0…` and `r0…`.
pub(crate) fn disjoint_union(a: &Automaton, other: &Automaton) -> Automaton {
    let mut b = Builder::new(a.alphabet().clone());
    let oa = copy_into(&mut b, a, "l");
    let ob = copy_into(&mut b, other, "r");
    for &q in a.initial() {
        b.set_initial(oa + q);
    }
    for &q in other.initial() {
        b.set_initial(ob + q);
    }
    for &q in a.accepting() {
        b.set_accepting(oa + q);
    }
    for &q in other.accepting() {
        b.set_accepting(ob + q);
    }
    b.build()
}

pub fn concat(a: &Nfa, other: &Nfa) -> Result<Nfa> {
    a.alphabet().ensure_same(other.alphabet())?;
    let mut b = Builder::new(a.alphabet().clone());
    let oa = copy_into(&mut b, a, "l");
    let ob = copy_into(&mut b, other, "r");
    for &q in a.initial() {
        b.set_initial(oa + q);
    }
    let other_accepts_empty = other.initial().iter().any(|q| other.is_accepting(*q));
    for &q in other.accepting() {
        b.set_accepting(ob + q);
    }
    for &f in a.accepting() {
        if other_accepts_empty {
            b.set_accepting(oa + f);
        }
        for &i in other.initial() {
            for l in a.alphabet().iter() {
                for &p in other.successors(i, l) {
                    b.add_transition(oa + f, l, ob + p);
                }
            }
        }
    }
    Ok(Nfa::new(b.build()))
}

pub fn star(a: &Nfa) -> Nfa {
    let mut b = Builder::new(a.alphabet().clone());
    let start = b.add_state("s");
    let o = copy_into(&mut b, a, "i");
    b.set_initial(start);
    b.set_accepting(start);
    for &f in a.accepting() {
        b.set_accepting(o + f);
    }
    let mut entry: Vec<(Letter, State)> = Vec::new();
    for &i in a.initial() {
        for l in a.alphabet().iter() {
            for &p in a.successors(i, l) {
                entry.push((l, o + p));
            }
        }
    }
    for &(l, p) in &entry {
        b.add_transition(start, l, p);
        for &f in a.accepting() {
            b.add_transition(o + f, l, p);
        }
    }
    Nfa::new(b.build())
}

pub fn intersection(a: &Nfa, other: &Nfa) -> Result<Nfa> {
    a.alphabet().ensure_same(other.alphabet())?;
    Ok(Nfa::new(product(a, other, |x, y| x && y)))
}

/// Reachable synchronous product; `accept` combines the two acceptance bits.
///
/// States are named `(p,q)` after the component names.
pub(crate) fn product(
    a: &Automaton,
    other: &Automaton,
    accept: impl Fn(bool, bool) -> bool,
) -> Automaton {
    let mut b = Builder::new(a.alphabet().clone());
    let mut index: HashMap<(State, State), State> = HashMap::new();
    let mut queue = VecDeque::new();
    for &p in a.initial() {
        for &q in other.initial() {
            let s = b.add_state(format!("({},{})", a.name(p), other.name(q)));
            b.set_initial(s);
            index.insert((p, q), s);
            queue.push_back((p, q));
        }
    }
    while let Some((p, q)) = queue.pop_front() {
        let s = index[&(p, q)];
        if accept(a.is_accepting(p), other.is_accepting(q)) {
            b.set_accepting(s);
        }
        for l in a.alphabet().iter() {
            for &p2 in a.successors(p, l) {
                for &q2 in other.successors(q, l) {
                    let t = match index.get(&(p2, q2)) {
                        Some(&t) => t,
                        None => {
                            let t = b.add_state(format!("({},{})", a.name(p2), other.name(q2)));
                            index.insert((p2, q2), t);
                            queue.push_back((p2, q2));
                            t
                        }
                    };
                    b.add_transition(s, l, t);
                }
            }
        }
    }
    b.build()
}

/// Drops transitions on letters outside `gamma`; the alphabet is unchanged.
pub fn restrict(a: &Nfa, gamma: &[Letter]) -> Nfa {
    let keep: BTreeSet<Letter> = gamma.iter().copied().collect();
    let mut b = Builder::new(a.alphabet().clone());
    for q in a.states() {
        b.add_state(a.name(q));
    }
    for &q in a.initial() {
        b.set_initial(q);
    }
    for &q in a.accepting() {
        b.set_accepting(q);
    }
    for (q, l, p) in a.transitions() {
        if keep.contains(&l) {
            b.add_transition(q, l, p);
        }
    }
    Nfa::new(b.build())
}

/// Two-state automaton for the words containing `letter` at least once.
pub fn contains_letter(alphabet: &super::Alphabet, letter: Letter) -> Nfa {
    let mut b = Builder::new(alphabet.clone());
    let without = b.add_state("without");
    let with = b.add_state("with");
    b.set_initial(without);
    b.set_accepting(with);
    for l in alphabet.iter() {
        b.add_transition(without, l, if l == letter { with } else { without });
        b.add_transition(with, l, with);
    }
    Nfa::new(b.build())
}

/// Automaton for a finite list of words, as a trie.
pub fn words(alphabet: &super::Alphabet, list: &[Vec<Letter>]) -> Nfa {
    let mut b = Builder::new(alphabet.clone());
    let root = b.add_state("t0");
    b.set_initial(root);
    for w in list {
        let mut cur = root;
        for &l in w {
            cur = match b.successors(cur, l).iter().next() {
                Some(&next) => next,
                None => {
                    let next = b.add_state(format!("t{}", b.num_states()));
                    b.add_transition(cur, l, next);
                    next
                }
            };
        }
        b.set_accepting(cur);
    }
    Nfa::new(b.build())
}
