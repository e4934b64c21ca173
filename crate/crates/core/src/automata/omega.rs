use std::collections::{BTreeSet, HashMap, VecDeque};

use super::automaton::{BuchiAutomaton, Builder, Nfa, State};
use super::word::UpWord;
use crate::error::Result;

/// Membership of `u·v^ω` in `L(a)`.
///
/// Searches the product of `a` with the positions of the word (prefix
/// positions, then period positions looping back) for a reachable cycle through
/// an accepting state. Letters are indices into `a`'s alphabet; use
/// [`UpWord::parse`] with the same alphabet to build `w`.
pub fn buchi_accepts_up(a: &BuchiAutomaton, w: &UpWord) -> bool {
    let u = w.prefix().len();
    let v = w.period().len();
    let positions = u + v;
    let next_pos = |i: usize| if i + 1 < positions { i + 1 } else { u };
    let node = |q: State, i: usize| q * positions + i;
    let total = a.num_states() * positions;

    let succ = |n: usize| -> Vec<usize> {
        let (q, i) = (n / positions, n % positions);
        let letter = w.at(i);
        a.successors(q, letter)
            .iter()
            .map(|&p| node(p, next_pos(i)))
            .collect()
    };

    let mut reachable = vec![false; total];
    let mut queue = VecDeque::new();
    for &q in a.initial() {
        let n = node(q, 0);
        if !reachable[n] {
            reachable[n] = true;
            queue.push_back(n);
        }
    }
    while let Some(n) = queue.pop_front() {
        for m in succ(n) {
            if !reachable[m] {
                reachable[m] = true;
                queue.push_back(m);
            }
        }
    }

    // an accepting node on a cycle; such nodes necessarily sit on period positions
    for (n, _) in reachable.iter().enumerate().filter(|(_, &r)| r) {
        if !a.is_accepting(n / positions) || n % positions < u {
            continue;
        }
        let mut seen = vec![false; total];
        let mut queue: VecDeque<usize> = succ(n).into_iter().collect();
        while let Some(m) = queue.pop_front() {
            if m == n {
                return true;
            }
            if !seen[m] {
                seen[m] = true;
                queue.extend(succ(m));
            }
        }
    }
    false
}

/// Convenience wrapper parsing the `u;v` syntax.
pub fn buchi_accepts(a: &BuchiAutomaton, word: &str) -> Result<bool> {
    let w = UpWord::parse(word, a.alphabet())?;
    Ok(buchi_accepts_up(a, &w))
}

/// An accepting lasso `u·v^ω` if `L(a)` is nonempty.
///
/// The lasso goes through the first accepting state (in state order) that is
/// reachable and lies on a cycle; both parts are shortest paths.
pub fn buchi_emptiness(a: &BuchiAutomaton) -> Option<UpWord> {
    let reachable = a.reachable_from(a.initial().iter().copied());
    for &q in a.accepting() {
        if !reachable.contains(&q) {
            continue;
        }
        let single: BTreeSet<State> = [q].into();
        let prefix = a
            .shortest_path(a.initial(), &single)
            .expect("reachable state has a path");
        // shortest nonempty cycle: one step out, then back
        let mut best: Option<Vec<usize>> = None;
        for l in a.alphabet().iter() {
            for &p in a.successors(q, l) {
                if let Some(rest) = a.shortest_path(&[p].into(), &single) {
                    let mut cycle = vec![l];
                    cycle.extend(rest);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
        if let Some(cycle) = best {
            return Some(UpWord::new(prefix, cycle).expect("cycle is nonempty"));
        }
    }
    None
}

/// `L(a) ∩ L(b)` by the usual two-phase product: phase 0 waits for an
/// accepting state of `a`, phase 1 for one of `b`, and the accepting states
/// are those where phase 1 sees `b` accept.
pub fn buchi_intersection(a: &BuchiAutomaton, b: &BuchiAutomaton) -> Result<BuchiAutomaton> {
    a.alphabet().ensure_same(b.alphabet())?;
    let mut out = Builder::new(a.alphabet().clone());
    let mut index: HashMap<(State, State, u8), State> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut intern =
        |key: (State, State, u8), out: &mut Builder, queue: &mut VecDeque<_>| -> State {
            *index.entry(key).or_insert_with(|| {
                let s = out.add_state(format!("({},{},{})", a.name(key.0), b.name(key.1), key.2));
                if key.2 == 1 && b.is_accepting(key.1) {
                    out.set_accepting(s);
                }
                queue.push_back((key, s));
                s
            })
        };
    for &p in a.initial() {
        for &q in b.initial() {
            let s = intern((p, q, 0), &mut out, &mut queue);
            out.set_initial(s);
        }
    }
    while let Some(((p, q, phase), s)) = queue.pop_front() {
        let next_phase = match phase {
            0 if a.is_accepting(p) => 1,
            1 if b.is_accepting(q) => 0,
            x => x,
        };
        for l in a.alphabet().iter() {
            for &p2 in a.successors(p, l) {
                for &q2 in b.successors(q, l) {
                    let t = intern((p2, q2, next_phase), &mut out, &mut queue);
                    out.add_transition(s, l, t);
                }
            }
        }
    }
    Ok(BuchiAutomaton::new(out.build()))
}

/// `L(a) = ⋃_{q∈α} L_fin(s_q)·L_fin(t_q)^ω` with `s_q = a` accepting at `{q}`
/// and `t_q = a` started and accepting at `{q}`.
pub fn decompose_omega(a: &BuchiAutomaton) -> Vec<(Nfa, Nfa)> {
    a.accepting()
        .iter()
        .map(|&q| {
            let s = a.with_sets(a.initial().iter().copied(), [q]);
            let t = a.with_sets([q], [q]);
            (Nfa::new(s), Nfa::new(t))
        })
        .collect()
}
