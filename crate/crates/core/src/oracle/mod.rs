//! Brute-force baselines for cross-checking the symbolic algorithms.
//!
//! Everything here works straight from the definitions: words are enumerated,
//! window permutations are listed one by one and semilinear sets are sampled
//! on a grid. The functions are slow on purpose and only meant for small
//! inputs.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::automata::{BuchiAutomaton, Letter, Nfa, State, UpWord};
use crate::error::{Error, Result};
use crate::semilinear::{FinVector, SemilinearSet};

/// Upper bound on the number of distinct orderings of one window.
const MAX_WINDOW_ORDERS: usize = 200_000;

/// `{Ψ(w) : w ∈ L(n), |w| ≤ maxlen}`, by enumerating words.
pub fn enum_parikh_language(n: &Nfa, maxlen: usize) -> BTreeSet<FinVector> {
    let d = n.alphabet().len();
    let mut out = BTreeSet::new();
    let mut stack: Vec<(BTreeSet<State>, Vec<u64>, usize)> =
        vec![(n.initial().clone(), vec![0; d], 0)];
    while let Some((states, counts, len)) = stack.pop() {
        if states.iter().any(|&q| n.is_accepting(q)) {
            out.insert(FinVector::new(counts.clone()));
        }
        if len == maxlen {
            continue;
        }
        for l in n.alphabet().iter() {
            let next = n.post(&states, &[l]);
            if next.is_empty() {
                continue;
            }
            let mut c = counts.clone();
            c[l] += 1;
            stack.push((next, c, len + 1));
        }
    }
    out
}

/// Whether `sl_membership` and `pred` agree on every point of `{0..=size}^d`.
pub fn grid_check_semilinear(
    s: &SemilinearSet,
    pred: impl Fn(&FinVector) -> bool,
    size: u64,
) -> bool {
    grid(s.dim(), size).all(|v| s.contains(&v).expect("dimension matches") == pred(&v))
}

/// All points of `{0..=size}^dim`.
pub fn grid(dim: usize, size: u64) -> impl Iterator<Item = FinVector> {
    let total = (size + 1).pow(dim as u32);
    (0..total).map(move |mut i| {
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push(i % (size + 1));
            i /= size + 1;
        }
        FinVector::new(v)
    })
}

/// `w ∈ J_k⊞(a)`, by searching over explicit window permutations.
///
/// Window `j` covers positions `jk..jk+k`. The windows are unrolled up to
/// the first one starting inside the period, followed by `unroll` copies of
/// the block of `lcm(k, |v|)/k` windows after which the letters repeat. A
/// node of the search graph is a state of `a`, a window index and whether the
/// last window passed through an accepting state; its successors come from
/// running `a` on every distinct reordering of the window.
pub fn brute_window_member(
    a: &BuchiAutomaton,
    k: usize,
    w: &UpWord,
    unroll: usize,
) -> Result<bool> {
    if k == 0 || unroll == 0 {
        return Err(Error::InvalidWord(
            "window size and unroll must be positive".into(),
        ));
    }
    let v = w.period().len();
    let head = w.prefix().len().div_ceil(k);
    let block = k * v / gcd(k, v) / k;
    let count = head + block * unroll;
    let windows: Vec<Vec<Vec<Letter>>> = (0..count)
        .map(|j| {
            let letters: Vec<Letter> = (j * k..(j + 1) * k).map(|i| w.at(i)).collect();
            orderings(&letters)
        })
        .collect::<Result<_>>()?;
    let next = |j: usize| if j + 1 < count { j + 1 } else { head };

    type Node = (State, usize, bool);
    let successors = |(q, j, _): Node| -> Vec<Node> {
        let mut out = BTreeSet::new();
        for word in &windows[j] {
            let mut runs: BTreeSet<(State, bool)> = [(q, false)].into();
            for &l in word {
                runs = runs
                    .iter()
                    .flat_map(|&(p, seen)| {
                        a.successors(p, l)
                            .iter()
                            .map(move |&r| (r, seen || a.is_accepting(r)))
                    })
                    .collect();
            }
            out.extend(runs.into_iter().map(|(p, seen)| (p, next(j), seen)));
        }
        out.into_iter().collect()
    };

    let starts: Vec<Node> = a.initial().iter().map(|&q| (q, 0, false)).collect();
    let reachable = explore(&starts, &successors);
    Ok(reachable
        .iter()
        .filter(|n| n.2)
        .any(|&n| explore(&successors(n), &successors).contains(&n)))
}

fn explore<N: Copy + Eq + std::hash::Hash>(starts: &[N], succ: &dyn Fn(N) -> Vec<N>) -> HashSet<N> {
    let mut seen: HashSet<N> = starts.iter().copied().collect();
    let mut queue: VecDeque<N> = starts.iter().copied().collect();
    while let Some(n) = queue.pop_front() {
        for m in succ(n) {
            if seen.insert(m) {
                queue.push_back(m);
            }
        }
    }
    seen
}

/// Distinct reorderings of `letters`.
fn orderings(letters: &[Letter]) -> Result<Vec<Vec<Letter>>> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    while next_permutation(&mut sorted) {
        out.push(sorted.clone());
        if out.len() > MAX_WINDOW_ORDERS {
            return Err(Error::ResourceCap {
                what: "window orderings",
                cap: MAX_WINDOW_ORDERS,
            });
        }
    }
    Ok(out)
}

fn next_permutation(xs: &mut [Letter]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len())
        .rev()
        .find(|&j| xs[j] > xs[i - 1])
        .expect("pivot exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{fixtures, Alphabet};
    use crate::semilinear::{sl_complement, LinearSet};
    use crate::Limits;

    #[test]
    fn words_of_a_ba_star() {
        let n = Nfa::from_parts(
            Alphabet::from_str_letters("ab").unwrap(),
            &["s", "t", "u"],
            &["s"],
            &["t"],
            &[("s", 'a', "t"), ("t", 'b', "u"), ("u", 'a', "t")],
        )
        .unwrap();
        let got: Vec<String> = enum_parikh_language(&n, 5)
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(got, ["(1,0)", "(2,1)", "(3,2)"]);
        let eps = Nfa::from_parts(
            Alphabet::from_str_letters("ab").unwrap(),
            &["e"],
            &["e"],
            &["e"],
            &[],
        )
        .unwrap();
        assert_eq!(
            enum_parikh_language(&eps, 4)
                .into_iter()
                .collect::<Vec<_>>(),
            vec![FinVector::zero(2)]
        );
        let none = Nfa::from_parts(
            Alphabet::from_str_letters("ab").unwrap(),
            &["e"],
            &["e"],
            &[] as &[&str],
            &[],
        )
        .unwrap();
        assert!(enum_parikh_language(&none, 4).is_empty());
    }

    #[test]
    fn grid_checks() {
        let diag = SemilinearSet::linear(LinearSet::new([0, 0].into(), [[1, 1].into()]).unwrap());
        assert!(grid_check_semilinear(&diag, |v| v[0] == v[1], 10));
        let off = sl_complement(&diag, &Limits::default()).unwrap();
        assert!(grid_check_semilinear(&off, |v| v[0] != v[1], 10));
        let from3 = SemilinearSet::linear(LinearSet::new([3].into(), [[1].into()]).unwrap());
        assert!(!grid_check_semilinear(&from3, |v| v[0] >= 2, 10));
    }

    #[test]
    fn window_search() {
        let a = fixtures::ab_loop();
        let w = |s: &str| UpWord::parse(s, a.alphabet()).unwrap();
        assert!(brute_window_member(&a, 3, &w(";aabbba"), 2).unwrap());
        assert!(brute_window_member(&a, 2, &w(";ab"), 2).unwrap());
        assert!(!brute_window_member(&a, 3, &w(";aaaabbbb"), 2).unwrap());
        let d = fixtures::window_source();
        assert!(
            !brute_window_member(&d, 2, &UpWord::parse("aa;bb", d.alphabet()).unwrap(), 8).unwrap()
        );
        assert!(
            brute_window_member(&d, 2, &UpWord::parse("ba;bb", d.alphabet()).unwrap(), 8).unwrap()
        );
    }

    #[test]
    fn orderings_are_distinct() {
        assert_eq!(orderings(&[0, 0, 1]).unwrap().len(), 3);
        assert_eq!(orderings(&[0, 1, 2]).unwrap().len(), 6);
    }
}
