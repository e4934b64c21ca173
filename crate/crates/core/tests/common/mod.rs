//! Shared corpora for the integration tests.
#![allow(dead_code)]

use jumpomega::automata::{Alphabet, BuchiAutomaton, Builder, Letter, Nfa, UpWord};
use jumpomega::jumping::parikh_of_up;
use jumpomega::masked::{Mask, MaskedSemilinearSet};
use jumpomega::semilinear::{FinVector, LinearSet, SemilinearSet};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(letters: &str) -> Alphabet {
    Alphabet::from_str_letters(letters).unwrap()
}

/// A random automaton with `n` states, one initial state `q0` and roughly
/// `density` transitions per state and letter.
pub fn random_automaton(
    rng: &mut ChaCha8Rng,
    sigma: &Alphabet,
    n: usize,
    density: f64,
) -> jumpomega::automata::Automaton {
    let mut b = Builder::new(sigma.clone());
    for i in 0..n {
        b.add_state(format!("q{i}"));
    }
    b.set_initial(0);
    for q in 0..n {
        if rng.gen_bool(0.4) {
            b.set_accepting(q);
        }
        for l in sigma.iter() {
            for p in 0..n {
                if rng.gen_bool((density / n as f64).min(1.0)) {
                    b.add_transition(q, l, p);
                }
            }
        }
    }
    b.build()
}

pub fn random_buchi(rng: &mut ChaCha8Rng, sigma: &Alphabet, n: usize) -> BuchiAutomaton {
    BuchiAutomaton::new(random_automaton(rng, sigma, n, 1.2))
}

pub fn random_nfa(rng: &mut ChaCha8Rng, sigma: &Alphabet, n: usize) -> Nfa {
    Nfa::new(random_automaton(rng, sigma, n, 1.2))
}

/// Random Büchi automata with at most five states, plus the named examples.
pub fn buchi_corpus(seed: u64, count: usize) -> Vec<BuchiAutomaton> {
    use jumpomega::automata::fixtures;
    let mut out = vec![
        fixtures::ab_loop(),
        fixtures::ba_loop(),
        fixtures::balanced_prefix(),
        fixtures::window_source(),
    ];
    let mut r = rng(seed);
    while out.len() < count {
        let sigma = if r.gen_bool(0.5) {
            alphabet("ab")
        } else {
            alphabet("abc")
        };
        let n = r.gen_range(1..=5);
        out.push(random_buchi(&mut r, &sigma, n));
    }
    out
}

fn all_words(sigma: &Alphabet, min: usize, max: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for len in 0..=max {
        if len >= min {
            out.extend(layer.iter().cloned());
        }
        layer = layer
            .iter()
            .flat_map(|w| sigma.iter().map(move |l| [w.clone(), vec![l]].concat()))
            .collect();
    }
    out
}

/// Every pair `(u, v)` with `|u| ≤ max_u` and `1 ≤ |v| ≤ max_v`, as words
/// `u·v^ω`; different pairs may denote the same word.
pub fn up_pairs(sigma: &Alphabet, max_u: usize, max_v: usize) -> Vec<UpWord> {
    let mut out: Vec<UpWord> = Vec::new();
    for u in all_words(sigma, 0, max_u) {
        for v in all_words(sigma, 1, max_v) {
            out.push(UpWord::new(u.clone(), v).unwrap());
        }
    }
    out
}

/// The distinct words among [`up_pairs`].
pub fn up_suite(sigma: &Alphabet, max_u: usize, max_v: usize) -> Vec<UpWord> {
    let mut out = up_pairs(sigma, max_u, max_v);
    out.sort();
    out.dedup();
    out
}

/// Membership of `w` in the jumping language with Parikh image `image`.
pub fn image_member(image: &MaskedSemilinearSet, w: &UpWord) -> bool {
    image.contains(&parikh_of_up(w, image.dim())).unwrap()
}

/// A random masked set with entries at most 5.
pub fn random_masked(rng: &mut ChaCha8Rng, sigma: &Alphabet) -> MaskedSemilinearSet {
    let d = sigma.len();
    let masks: Vec<Mask> = Mask::all(d).collect();
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let m = masks[rng.gen_range(0..masks.len())].clone();
        let mut comps = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let vec = |rng: &mut ChaCha8Rng, max: u64| {
                FinVector::new((0..d).map(|_| rng.gen_range(0..=max)).collect())
            };
            let base = vec(rng, 5);
            let periods: Vec<FinVector> = (0..rng.gen_range(0..=2)).map(|_| vec(rng, 3)).collect();
            comps.push(LinearSet::new(base, periods).unwrap());
        }
        parts.push((m, SemilinearSet::new(d, comps).unwrap()));
    }
    MaskedSemilinearSet::new(sigma.clone(), parts).unwrap()
}

/// A random formula over `vars` with small coefficients.
pub fn random_formula(
    r: &mut ChaCha8Rng,
    vars: &[u32],
    depth: u32,
) -> jumpomega::presburger::Formula {
    use jumpomega::presburger::{Formula, Term, Var};
    if depth == 0 || r.gen_bool(0.3) {
        let mut t = Term::constant(r.gen_range(-12..=12));
        for &v in vars {
            let c: i64 = r.gen_range(-3..=3);
            if c != 0 {
                t = t.add(&Term::monomial(c, Var(v)));
            }
        }
        return match r.gen_range(0..4) {
            0 | 1 => Formula::le(t, Term::zero()),
            2 => Formula::eq(t, Term::zero()),
            _ => Formula::congruent(t, 0, r.gen_range(2..=3)),
        };
    }
    let a = random_formula(r, vars, depth - 1);
    let b = random_formula(r, vars, depth - 1);
    match r.gen_range(0..3) {
        0 => Formula::and(vec![a, b]),
        1 => Formula::or(vec![a, b]),
        _ => a.not(),
    }
}

/// A random semilinear set in dimension `d` with small entries.
pub fn small_set(r: &mut ChaCha8Rng, d: usize) -> SemilinearSet {
    let comps: Vec<LinearSet> = (0..r.gen_range(1..=2))
        .map(|_| {
            let base = FinVector::new((0..d).map(|_| r.gen_range(0..=4)).collect());
            let periods: Vec<FinVector> = (0..r.gen_range(0..=2))
                .map(|_| FinVector::new((0..d).map(|_| r.gen_range(0..=3)).collect()))
                .collect();
            LinearSet::new(base, periods).unwrap()
        })
        .collect();
    SemilinearSet::new(d, comps).unwrap()
}

/// Property-test settings with a fixed seed, so every run checks the same cases.
pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..proptest::test_runner::Config::default()
    }
}
