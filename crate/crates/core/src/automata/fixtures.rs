//! Small named automata that recur in tests, documentation and the CLI examples.

use super::{Alphabet, BuchiAutomaton};

fn build(
    letters: &str,
    states: &[&str],
    accepting: &[&str],
    edges: &[(&str, char, &str)],
) -> BuchiAutomaton {
    let sigma = Alphabet::from_str_letters(letters).expect("fixture alphabet");
    BuchiAutomaton::from_parts(sigma, states, &states[..1], accepting, edges)
        .expect("fixture automaton")
}

/// `q0 -a-> q1 -b-> q0`, accepting `q1`: the language `{(ab)^ω}`.
pub fn ab_loop() -> BuchiAutomaton {
    build(
        "ab",
        &["q0", "q1"],
        &["q1"],
        &[("q0", 'a', "q1"), ("q1", 'b', "q0")],
    )
}

/// `s0 -b-> s1 -a-> s0`, accepting `s1`: the language `{(ba)^ω}`.
pub fn ba_loop() -> BuchiAutomaton {
    build(
        "ab",
        &["s0", "s1"],
        &["s1"],
        &[("s0", 'b', "s1"), ("s1", 'a', "s0")],
    )
}

/// `(ab)*·c^ω`, whose jumping language is `{u·c^ω : #a(u) = #b(u)}`.
pub fn balanced_prefix() -> BuchiAutomaton {
    build(
        "abc",
        &["q0", "q1", "q2"],
        &["q2"],
        &[
            ("q0", 'a', "q1"),
            ("q1", 'b', "q0"),
            ("q0", 'c', "q2"),
            ("q2", 'c', "q2"),
        ],
    )
}

/// The deterministic automaton used to illustrate the 2-window construction.
pub fn window_source() -> BuchiAutomaton {
    build(
        "ab",
        &["q0", "q1", "q2", "q3"],
        &["q3"],
        &[
            ("q0", 'a', "q1"),
            ("q1", 'b', "q0"),
            ("q0", 'b', "q2"),
            ("q2", 'b', "q0"),
            ("q2", 'a', "q3"),
            ("q3", 'b', "q3"),
        ],
    )
}

/// The hand-drawn 2-window automaton for [`window_source`], dead states omitted.
pub fn two_window_reference() -> BuchiAutomaton {
    build(
        "ab",
        &["q0[0,0]", "q0[1,0]", "q0[0,1]", "q3[acc]", "q3[0,1]"],
        &["q3[acc]"],
        &[
            ("q0[0,0]", 'a', "q0[1,0]"),
            ("q0[0,0]", 'b', "q0[0,1]"),
            ("q0[1,0]", 'b', "q0[0,0]"),
            ("q0[1,0]", 'b', "q3[acc]"),
            ("q0[0,1]", 'a', "q0[0,0]"),
            ("q0[0,1]", 'b', "q0[0,0]"),
            ("q0[0,1]", 'a', "q3[acc]"),
            ("q3[acc]", 'b', "q3[0,1]"),
            ("q3[0,1]", 'b', "q3[acc]"),
        ],
    )
}

/// One accepting state with a self-loop on every letter: `L = Σ^ω`.
pub fn universal(letters: &str) -> BuchiAutomaton {
    let sigma = Alphabet::from_str_letters(letters).expect("fixture alphabet");
    let edges: Vec<(&str, char, &str)> = sigma.letters().iter().map(|&c| ("u", c, "u")).collect();
    BuchiAutomaton::from_parts(sigma, &["u"], &["u"], &["u"], &edges).expect("fixture automaton")
}
