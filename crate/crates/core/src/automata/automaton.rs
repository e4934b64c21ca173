use std::collections::{BTreeSet, HashMap, VecDeque};
use std::ops::Deref;

use super::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// State index inside an [`Automaton`].
pub type State = usize;

/// The shared data of finite-word and Büchi automata: `⟨Σ, Q, δ, Q₀, α⟩`.
///
/// States carry names for serialization; every algorithm works on indices.
/// Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: BTreeSet<State>,
    accepting: BTreeSet<State>,
    // delta[q][letter]
    delta: Vec<Vec<BTreeSet<State>>>,
}

impl Automaton {
    /// Builds an automaton from named parts, checking that every name is declared.
    pub fn from_parts<S: AsRef<str>>(
        alphabet: Alphabet,
        states: &[S],
        initial: &[S],
        accepting: &[S],
        transitions: &[(S, char, S)],
    ) -> Result<Self> {
        let mut b = Builder::new(alphabet);
        let mut index = HashMap::new();
        for s in states {
            let s = s.as_ref();
            if index.contains_key(s) {
                return Err(Error::InvalidAutomaton(format!("duplicate state {s:?}")));
            }
            index.insert(s.to_string(), b.add_state(s));
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::InvalidAutomaton(format!("undeclared state {s:?}")))
        };
        for s in initial {
            b.set_initial(lookup(s.as_ref())?);
        }
        for s in accepting {
            b.set_accepting(lookup(s.as_ref())?);
        }
        for (from, c, to) in transitions {
            let letter = b.alphabet().index_of(*c)?;
            b.add_transition(lookup(from.as_ref())?, letter, lookup(to.as_ref())?);
        }
        Ok(b.build())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> std::ops::Range<State> {
        0..self.names.len()
    }

    pub fn name(&self, q: State) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state_by_name(&self, name: &str) -> Option<State> {
        self.names.iter().position(|n| n == name)
    }

    pub fn initial(&self) -> &BTreeSet<State> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<State> {
        &self.accepting
    }

    pub fn is_initial(&self, q: State) -> bool {
        self.initial.contains(&q)
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting.contains(&q)
    }

    pub fn successors(&self, q: State, letter: Letter) -> &BTreeSet<State> {
        &self.delta[q][letter]
    }

    /// All transitions `(from, letter, to)` in state-then-letter order.
    pub fn transitions(&self) -> impl Iterator<Item = (State, Letter, State)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(l, succ)| succ.iter().map(move |&p| (q, l, p)))
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().flatten().map(BTreeSet::len).sum()
    }

    /// `|Q₀| = 1` and `|δ(q,σ)| = 1` for every state and letter.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.delta.iter().flatten().all(|succ| succ.len() == 1)
    }

    /// Same transition structure with different initial and accepting sets.
    pub fn with_sets(
        &self,
        initial: impl IntoIterator<Item = State>,
        accepting: impl IntoIterator<Item = State>,
    ) -> Automaton {
        Automaton {
            initial: initial.into_iter().collect(),
            accepting: accepting.into_iter().collect(),
            ..self.clone()
        }
    }

    /// States reachable from `from` (inclusive).
    pub fn reachable_from(&self, from: impl IntoIterator<Item = State>) -> BTreeSet<State> {
        let mut seen: BTreeSet<State> = BTreeSet::new();
        let mut queue: VecDeque<State> = VecDeque::new();
        for q in from {
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
        while let Some(q) = queue.pop_front() {
            for succ in &self.delta[q] {
                for &p in succ {
                    if seen.insert(p) {
                        queue.push_back(p);
                    }
                }
            }
        }
        seen
    }

    /// States from which some state of `targets` is reachable (inclusive).
    pub fn coreachable_to(&self, targets: impl IntoIterator<Item = State>) -> BTreeSet<State> {
        let mut preds: Vec<Vec<State>> = vec![Vec::new(); self.num_states()];
        for (q, _, p) in self.transitions() {
            preds[p].push(q);
        }
        let mut seen: BTreeSet<State> = BTreeSet::new();
        let mut queue: VecDeque<State> = VecDeque::new();
        for q in targets {
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
        while let Some(p) = queue.pop_front() {
            for &q in &preds[p] {
                if seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    /// Restriction to the states in `keep`, renumbered in increasing order.
    pub fn induced(&self, keep: &BTreeSet<State>) -> Automaton {
        let map: HashMap<State, State> = keep.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let mut b = Builder::new(self.alphabet.clone());
        for &q in keep {
            b.add_state(&self.names[q]);
        }
        for &q in keep {
            if self.is_initial(q) {
                b.set_initial(map[&q]);
            }
            if self.is_accepting(q) {
                b.set_accepting(map[&q]);
            }
            for l in self.alphabet.iter() {
                for p in &self.delta[q][l] {
                    if let Some(&p) = map.get(p) {
                        b.add_transition(map[&q], l, p);
                    }
                }
            }
        }
        b.build()
    }

    /// Removes states that are unreachable or cannot reach an accepting state.
    ///
    /// This preserves the finite-word language. An empty language yields an
    /// automaton with no states.
    pub fn trim_finite(&self) -> Automaton {
        let fwd = self.reachable_from(self.initial.iter().copied());
        let bwd = self.coreachable_to(self.accepting.iter().copied());
        let keep: BTreeSet<State> = fwd.intersection(&bwd).copied().collect();
        self.induced(&keep)
    }

    /// Shortest word leading from some state of `from` to some state of `to`.
    pub fn shortest_path(
        &self,
        from: &BTreeSet<State>,
        to: &BTreeSet<State>,
    ) -> Option<Vec<Letter>> {
        let mut parent: HashMap<State, Option<(State, Letter)>> = HashMap::new();
        let mut queue = VecDeque::new();
        for &q in from {
            parent.insert(q, None);
            queue.push_back(q);
        }
        while let Some(q) = queue.pop_front() {
            if to.contains(&q) {
                let mut word = Vec::new();
                let mut cur = q;
                while let Some(Some((prev, l))) = parent.get(&cur) {
                    word.push(*l);
                    cur = *prev;
                }
                word.reverse();
                return Some(word);
            }
            for l in self.alphabet.iter() {
                for &p in &self.delta[q][l] {
                    if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(p) {
                        e.insert(Some((q, l)));
                        queue.push_back(p);
                    }
                }
            }
        }
        None
    }

    /// States reached from `from` after reading `word`.
    pub fn post(&self, from: &BTreeSet<State>, word: &[Letter]) -> BTreeSet<State> {
        let mut cur = from.clone();
        for &l in word {
            cur = cur
                .iter()
                .flat_map(|&q| self.delta[q][l].iter().copied())
                .collect();
        }
        cur
    }
}

impl Automaton {
    /// Adds a rejecting sink for every missing transition, if there is one.
    pub fn completed(&self) -> Automaton {
        let missing = self.delta.iter().flatten().any(|succ| succ.is_empty());
        if !missing {
            return self.clone();
        }
        let mut a = self.clone();
        let sink = a.names.len();
        a.names.push("sink".into());
        a.delta.push(vec![BTreeSet::from([sink]); a.alphabet.len()]);
        for row in &mut a.delta {
            for succ in row.iter_mut() {
                if succ.is_empty() {
                    succ.insert(sink);
                }
            }
        }
        a
    }

    /// Quotient of the reachable part by the coarsest bisimulation that
    /// respects acceptance.
    ///
    /// Bisimilar states have the same finite-word and Büchi languages, and the
    /// quotient of a deterministic automaton is deterministic. State names are
    /// `m0, m1, …` in order of the smallest original state of each block.
    pub fn reduce(&self) -> Automaton {
        let reach = self.reachable_from(self.initial.iter().copied());
        let a = self.induced(&reach);
        let n = a.num_states();
        let mut block: Vec<usize> = (0..n).map(|q| usize::from(a.is_accepting(q))).collect();
        loop {
            let mut sigs: HashMap<(usize, Vec<BTreeSet<usize>>), usize> = HashMap::new();
            let mut next = vec![0; n];
            for q in 0..n {
                let sig: Vec<BTreeSet<usize>> = a.delta[q]
                    .iter()
                    .map(|succ| succ.iter().map(|&p| block[p]).collect())
                    .collect();
                let len = sigs.len();
                next[q] = *sigs.entry((block[q], sig)).or_insert(len);
            }
            let stable = sigs.len() == block.iter().collect::<BTreeSet<_>>().len();
            block = next;
            if stable {
                break;
            }
        }
        let count = block.iter().max().map_or(0, |m| m + 1);
        let mut b = Builder::new(a.alphabet.clone());
        for i in 0..count {
            b.add_state(format!("m{i}"));
        }
        for q in 0..n {
            if a.is_initial(q) {
                b.set_initial(block[q]);
            }
            if a.is_accepting(q) {
                b.set_accepting(block[q]);
            }
            for l in a.alphabet.iter() {
                for &p in &a.delta[q][l] {
                    b.add_transition(block[q], l, block[p]);
                }
            }
        }
        b.build()
    }
}

/// Incremental construction of an [`Automaton`] by indices.
#[derive(Clone, Debug)]
pub struct Builder {
    inner: Automaton,
}

impl Builder {
    pub fn new(alphabet: Alphabet) -> Self {
        Builder {
            inner: Automaton {
                alphabet,
                names: Vec::new(),
                initial: BTreeSet::new(),
                accepting: BTreeSet::new(),
                delta: Vec::new(),
            },
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.inner.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.inner.names.len()
    }

    pub fn add_state(&mut self, name: impl Into<String>) -> State {
        self.inner.names.push(name.into());
        self.inner
            .delta
            .push(vec![BTreeSet::new(); self.inner.alphabet.len()]);
        self.inner.names.len() - 1
    }

    pub fn set_initial(&mut self, q: State) {
        self.inner.initial.insert(q);
    }

    pub fn set_accepting(&mut self, q: State) {
        self.inner.accepting.insert(q);
    }

    pub fn add_transition(&mut self, from: State, letter: Letter, to: State) {
        self.inner.delta[from][letter].insert(to);
    }

    pub fn successors(&self, q: State, letter: Letter) -> &BTreeSet<State> {
        &self.inner.delta[q][letter]
    }

    pub fn build(self) -> Automaton {
        self.inner
    }
}

/// An automaton read over finite words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa(Automaton);

/// An automaton read over infinite words with the Büchi condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchiAutomaton(Automaton);

macro_rules! wrapper {
    ($t:ident) => {
        impl $t {
            pub fn new(inner: Automaton) -> Self {
                $t(inner)
            }

            pub fn from_parts<S: AsRef<str>>(
                alphabet: Alphabet,
                states: &[S],
                initial: &[S],
                accepting: &[S],
                transitions: &[(S, char, S)],
            ) -> Result<Self> {
                Automaton::from_parts(alphabet, states, initial, accepting, transitions).map($t)
            }

            pub fn automaton(&self) -> &Automaton {
                &self.0
            }

            pub fn into_inner(self) -> Automaton {
                self.0
            }
        }

        impl Deref for $t {
            type Target = Automaton;

            fn deref(&self) -> &Automaton {
                &self.0
            }
        }

        impl From<Automaton> for $t {
            fn from(a: Automaton) -> Self {
                $t(a)
            }
        }
    };
}

wrapper!(Nfa);
wrapper!(BuchiAutomaton);

impl Nfa {
    pub fn as_buchi(&self) -> BuchiAutomaton {
        BuchiAutomaton(self.0.clone())
    }

    /// `L_fin = ∅`.
    pub fn is_empty(&self) -> bool {
        self.shortest_path(self.initial(), self.accepting())
            .is_none()
    }

    /// Membership of a finite word given as letter indices.
    pub fn accepts_letters(&self, word: &[Letter]) -> bool {
        self.post(self.initial(), word)
            .iter()
            .any(|q| self.is_accepting(*q))
    }

    /// Membership of a finite word; fails on letters outside the alphabet.
    pub fn accepts(&self, word: &str) -> Result<bool> {
        let w = self.alphabet().parse_word(word)?;
        Ok(self.accepts_letters(&w))
    }

    /// Subset construction, completed with a sink so that the result is deterministic.
    ///
    /// States are named `d0, d1, …` in breadth-first discovery order.
    pub fn determinize(&self, limits: &crate::Limits) -> Result<Nfa> {
        let start: BTreeSet<State> = self.initial().clone();
        let mut index: HashMap<BTreeSet<State>, State> = HashMap::new();
        let mut order: Vec<BTreeSet<State>> = Vec::new();
        let mut b = Builder::new(self.alphabet().clone());
        index.insert(start.clone(), b.add_state("d0"));
        order.push(start);
        b.set_initial(0);
        let mut i = 0;
        while i < order.len() {
            let set = order[i].clone();
            if set.iter().any(|q| self.is_accepting(*q)) {
                b.set_accepting(i);
            }
            for l in self.alphabet().iter() {
                let next: BTreeSet<State> = set
                    .iter()
                    .flat_map(|&q| self.successors(q, l).iter().copied())
                    .collect();
                let target = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        if order.len() >= limits.states {
                            return Err(Error::ResourceCap {
                                what: "subset construction",
                                cap: limits.states,
                            });
                        }
                        let t = b.add_state(format!("d{}", order.len()));
                        index.insert(next.clone(), t);
                        order.push(next);
                        t
                    }
                };
                b.add_transition(i, l, target);
            }
            i += 1;
        }
        Ok(Nfa(b.build()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures;

    #[test]
    fn from_parts_rejects_undeclared_states() {
        let sigma = Alphabet::from_str_letters("a").unwrap();
        let err = Automaton::from_parts(sigma, &["p"], &["q"], &[], &[]).unwrap_err();
        assert!(matches!(err, Error::InvalidAutomaton(_)));
    }

    #[test]
    fn alternation_a_as_nfa() {
        let a = Nfa::new(fixtures::ab_loop().into_inner());
        assert!(a.accepts("a").unwrap());
        assert!(!a.accepts("").unwrap());
        assert!(a.accepts("aba").unwrap());
        assert!(!a.accepts("ab").unwrap());
        assert!(a.accepts("c").is_err());
    }

    #[test]
    fn determinism_predicate() {
        assert!(!fixtures::ab_loop().is_deterministic());
        let d = Nfa::new(fixtures::ab_loop().into_inner())
            .determinize(&crate::Limits::default())
            .unwrap();
        assert!(d.is_deterministic());
        for w in ["", "a", "ab", "aba", "abab", "b", "ababa"] {
            let n = Nfa::new(fixtures::ab_loop().into_inner());
            assert_eq!(d.accepts(w).unwrap(), n.accepts(w).unwrap(), "{w}");
        }
    }

    #[test]
    fn trim_removes_dead_states() {
        let sigma = Alphabet::from_str_letters("ab").unwrap();
        let a = Automaton::from_parts(
            sigma,
            &["p", "q", "dead", "orphan"],
            &["p"],
            &["q"],
            &[("p", 'a', "q"), ("p", 'b', "dead"), ("orphan", 'a', "q")],
        )
        .unwrap();
        let t = a.trim_finite();
        assert_eq!(t.names(), &["p".to_string(), "q".to_string()]);
    }
}
