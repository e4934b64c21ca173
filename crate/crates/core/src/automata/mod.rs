//! Finite-word and Büchi automata, ultimately periodic words, and the
//! decomposition of a Büchi language into `⋃ Sᵢ·Tᵢ^ω`.

pub mod algebra;
mod alphabet;
mod automaton;
pub mod fixtures;
mod omega;
mod word;

pub use algebra::{nfa_algebra, NfaOp};
pub use alphabet::{Alphabet, Letter};
pub use automaton::{Automaton, BuchiAutomaton, Builder, Nfa, State};
pub use omega::{
    buchi_accepts, buchi_accepts_up, buchi_emptiness, buchi_intersection, decompose_omega,
};
pub use word::UpWord;
