//! Parikh images of finite-word automata.
//!
//! An accepting path whose visited-state set is `S` can be shortened by
//! cutting out simple cycles as long as every state of `S` stays on the path.
//! The Parikh image is therefore the union, over short accepting paths, of
//! `Lin(Ψ(path), {Ψ(c) : c simple cycle inside S})`. Short paths are found by
//! a search that never lets more than `|S|` steps pass without the visited set
//! growing: a longer stretch repeats a state and contains a removable cycle.

use std::collections::{HashMap, VecDeque};

use super::set::{LinearSet, SemilinearSet};
use super::vector::FinVector;
use crate::automata::{Automaton, Nfa, State};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Fixed-width bitset over states.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct StateSet(Vec<u64>);

impl StateSet {
    fn new(n: usize) -> Self {
        StateSet(vec![0; n.div_ceil(64).max(1)])
    }

    fn insert(&mut self, q: State) -> bool {
        let (w, b) = (q / 64, 1u64 << (q % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    fn contains(&self, q: State) -> bool {
        self.0[q / 64] & (1u64 << (q % 64)) != 0
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &StateSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn cap_error(limits: &Limits) -> Error {
    Error::ResourceCap {
        what: "parikh search configurations",
        cap: limits.parikh_configs,
    }
}

/// Every labelled simple cycle as (state set, Parikh vector).
///
/// A cycle is reported once, from its least state.
fn simple_cycles(a: &Automaton, limits: &Limits) -> Result<Vec<(StateSet, FinVector)>> {
    let n = a.num_states();
    let d = a.alphabet().len();
    let mut found: Vec<(StateSet, FinVector)> = Vec::new();
    let mut steps = 0usize;
    for start in 0..n {
        // DFS over paths start → … using only states > start
        let mut stack: Vec<(State, StateSet, Vec<u64>)> = Vec::new();
        let mut init = StateSet::new(n);
        init.insert(start);
        stack.push((start, init, vec![0; d]));
        while let Some((q, on_path, vec)) = stack.pop() {
            for l in a.alphabet().iter() {
                for &p in a.successors(q, l) {
                    steps += 1;
                    if steps > limits.parikh_configs {
                        return Err(cap_error(limits));
                    }
                    let mut v2 = vec.clone();
                    v2[l] += 1;
                    if p == start {
                        found.push((on_path.clone(), FinVector::new(v2)));
                    } else if p > start && !on_path.contains(p) {
                        let mut s2 = on_path.clone();
                        s2.insert(p);
                        stack.push((p, s2, v2));
                    }
                }
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// `Ψ(L(n))` as an explicit semilinear set over `n`'s alphabet.
pub fn parikh_of_nfa(n: &Nfa, limits: &Limits) -> Result<SemilinearSet> {
    let d = n.alphabet().len();
    let a = n.trim_finite();
    if a.initial().is_empty() || a.accepting().is_empty() {
        return Ok(SemilinearSet::empty(d));
    }
    let cycles = simple_cycles(&a, limits)?;
    let ns = a.num_states();

    // configuration → least number of steps since the visited set last grew
    type Config = (State, StateSet, Vec<u64>);
    let mut best: HashMap<Config, usize> = HashMap::new();
    let mut queue: VecDeque<(Config, usize)> = VecDeque::new();
    for &q in a.initial() {
        let mut s = StateSet::new(ns);
        s.insert(q);
        let c = (q, s, vec![0; d]);
        best.insert(c.clone(), 0);
        queue.push_back((c, 0));
    }
    while let Some(((q, visited, vec), since)) = queue.pop_front() {
        if best
            .get(&(q, visited.clone(), vec.clone()))
            .is_some_and(|&b| b < since)
        {
            continue;
        }
        for l in a.alphabet().iter() {
            for &p in a.successors(q, l) {
                let mut s2 = visited.clone();
                let grew = s2.insert(p);
                let since2 = if grew { 0 } else { since + 1 };
                if since2 > s2.len() {
                    continue;
                }
                let mut v2 = vec.clone();
                v2[l] += 1;
                let key = (p, s2, v2);
                if best.get(&key).is_some_and(|&b| b <= since2) {
                    continue;
                }
                best.insert(key.clone(), since2);
                if best.len() > limits.parikh_configs {
                    return Err(cap_error(limits));
                }
                queue.push_back((key, since2));
            }
        }
    }

    let mut period_cache: HashMap<StateSet, Vec<FinVector>> = HashMap::new();
    let mut components = Vec::new();
    for (q, visited, vec) in best.into_keys() {
        if !a.is_accepting(q) {
            continue;
        }
        let periods = period_cache
            .entry(visited.clone())
            .or_insert_with(|| {
                cycles
                    .iter()
                    .filter(|(s, _)| s.is_subset(&visited))
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .clone();
        components.push(LinearSet::new(FinVector::new(vec), periods)?);
    }
    Ok(SemilinearSet::new(d, components)?.simplified())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{fixtures, Alphabet};

    fn lin(base: &[u64], periods: &[&[u64]]) -> SemilinearSet {
        SemilinearSet::linear(
            LinearSet::new(
                base.to_vec().into(),
                periods.iter().map(|p| p.to_vec().into()),
            )
            .unwrap(),
        )
    }

    #[test]
    fn a_star() {
        let n = Nfa::from_parts(
            Alphabet::from_str_letters("a").unwrap(),
            &["q"],
            &["q"],
            &["q"],
            &[("q", 'a', "q")],
        )
        .unwrap();
        assert_eq!(
            parikh_of_nfa(&n, &Limits::default()).unwrap(),
            lin(&[0], &[&[1]])
        );
    }

    #[test]
    fn ab_star() {
        let n = Nfa::from_parts(
            Alphabet::from_str_letters("ab").unwrap(),
            &["p", "q"],
            &["p"],
            &["p"],
            &[("p", 'a', "q"), ("q", 'b', "p")],
        )
        .unwrap();
        assert_eq!(
            parikh_of_nfa(&n, &Limits::default()).unwrap(),
            lin(&[0, 0], &[&[1, 1]])
        );
    }

    #[test]
    fn alternation_finite_part() {
        let n = Nfa::new(fixtures::ab_loop().automaton().clone());
        assert_eq!(
            parikh_of_nfa(&n, &Limits::default()).unwrap(),
            lin(&[1, 0], &[&[1, 1]])
        );
    }

    #[test]
    fn empty_language() {
        let n = Nfa::from_parts(
            Alphabet::from_str_letters("ab").unwrap(),
            &["p"],
            &["p"],
            &[],
            &[("p", 'a', "p")],
        )
        .unwrap();
        assert!(parikh_of_nfa(&n, &Limits::default()).unwrap().is_empty());
    }
}
