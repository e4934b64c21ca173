use super::kwindow::KWindow;
use crate::automata::{Alphabet, BuchiAutomaton, Builder, Letter, State, UpWord};
use crate::error::{Error, Result};
use crate::jumping::{jumping_parikh, representative_word};
use crate::limits::Limits;
use crate::masked::Mask;

/// Outcome of the bounded search for a window size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowSearch {
    /// The least `k` for which the word is a `k`-window member.
    MemberAt(usize),
    /// No `k` up to the bound works; the word may still need a larger window.
    NotFoundUpTo(usize),
}

impl WindowSearch {
    pub fn is_member(self) -> bool {
        matches!(self, WindowSearch::MemberAt(_))
    }
}

/// An automaton `b` with `J∃⊞(b) = J(a)`.
///
/// Each linear component `Lin(b, Q ∪ E𝔪)` of the canonical Parikh image of
/// `J(a)` yields a chain reading `w_b` followed by loops on the words `w_q`.
/// The end of the chain hands over to a tail automaton for the words over
/// `𝔪|∞` in which every letter of `𝔪|∞` recurs, realized as a generalized
/// Büchi automaton with one set per letter and degeneralized by a counter
/// that waits for the letters in alphabet order.
pub fn ewindow_construct(a: &BuchiAutomaton, limits: &Limits) -> Result<BuchiAutomaton> {
    let image = jumping_parikh(a, limits)?;
    let alphabet = a.alphabet().clone();
    let mut b = Builder::new(alphabet.clone());
    for mask in image.masks() {
        let tail = Tail::add(&mut b, mask);
        let set = image.get(mask).expect("listed mask");
        for c in set.components() {
            let mut cur = b.add_state(format!("b{}", b.num_states()));
            b.set_initial(cur);
            for l in representative_word(c.base()) {
                let next = b.add_state(format!("b{}", b.num_states()));
                b.add_transition(cur, l, next);
                cur = next;
            }
            let hub = cur;
            for p in c
                .periods()
                .iter()
                .filter(|p| mask.inf_letters().all(|i| p[i] == 0))
            {
                let word = representative_word(p);
                let mut at = hub;
                for (i, &l) in word.iter().enumerate() {
                    let next = if i + 1 == word.len() {
                        hub
                    } else {
                        b.add_state(format!("p{}", b.num_states()))
                    };
                    b.add_transition(at, l, next);
                    at = next;
                }
            }
            // the hub acts as the entry state of the tail
            for &l in &tail.letters {
                b.add_transition(hub, l, tail.step(0, l));
            }
            if b.num_states() > limits.states {
                return Err(Error::ResourceCap {
                    what: "automaton states",
                    cap: limits.states,
                });
            }
        }
    }
    if b.num_states() == 0 {
        return Ok(empty(&alphabet));
    }
    Ok(BuchiAutomaton::new(b.build()))
}

/// Degeneralized tail for one mask: `wait[i]` waits for the `i`-th letter of
/// `𝔪|∞`, `done` has just seen the last one and is the only accepting state.
struct Tail {
    letters: Vec<Letter>,
    wait: Vec<State>,
    done: State,
}

impl Tail {
    fn add(b: &mut Builder, mask: &Mask) -> Tail {
        let letters: Vec<Letter> = mask.inf_letters().collect();
        let base = b.num_states();
        let wait: Vec<State> = (0..letters.len())
            .map(|i| b.add_state(format!("t{base}.{i}")))
            .collect();
        let done = b.add_state(format!("t{base}.acc"));
        b.set_accepting(done);
        let tail = Tail {
            letters,
            wait,
            done,
        };
        for i in 0..=tail.letters.len() {
            let from = if i < tail.letters.len() {
                tail.wait[i]
            } else {
                tail.done
            };
            let counter = i % tail.letters.len();
            for &l in &tail.letters {
                b.add_transition(from, l, tail.step(counter, l));
            }
        }
        tail
    }

    /// Target when the counter waits for letter number `i` and reads `l`.
    fn step(&self, i: usize, l: Letter) -> State {
        if l != self.letters[i] {
            self.wait[i]
        } else if i + 1 == self.letters.len() {
            self.done
        } else {
            self.wait[i + 1]
        }
    }
}

fn empty(alphabet: &Alphabet) -> BuchiAutomaton {
    let mut b = Builder::new(alphabet.clone());
    let q = b.add_state("empty");
    b.set_initial(q);
    BuchiAutomaton::new(b.build())
}

/// Least `k ≤ kmax` with `w ∈ J_k⊞(a)`.
pub fn ewindow_member_bounded(a: &BuchiAutomaton, w: &UpWord, kmax: usize) -> Result<WindowSearch> {
    if kmax == 0 {
        return Err(Error::InvalidWord("kmax must be at least 1".into()));
    }
    for k in 1..=kmax {
        if KWindow::new(a, k)?.accepts(w) {
            return Ok(WindowSearch::MemberAt(k));
        }
    }
    Ok(WindowSearch::NotFoundUpTo(kmax))
}
