//! Jumping automata over infinite words.
//!
//! A Büchi automaton read in *jumping* mode accepts every word that has a
//! permutation in its language, where a permutation of an infinite word keeps
//! the finite letter counts and the set of letters occurring infinitely often.
//! The Parikh images of such languages are exactly the *masked semilinear
//! sets*, and this crate converts between the two representations in both
//! directions. On top of that it provides the closure constructions
//! (union, intersection, complement, determinization), the decision
//! procedures, and the fixed-window and existential-window variants.
//!
//! The layers, bottom-up:
//!
//! * [`automata`]: NFAs, Büchi automata, ultimately periodic words.
//! * [`presburger`]: quantifier elimination and Hilbert bases over ℕ.
//! * [`semilinear`]: explicit semilinear sets and Parikh images of NFAs.
//! * [`masked`]: masked semilinear sets and their canonical oblivious form.
//! * [`jumping`]: the automaton ↔ masked-set pipeline, closure and decisions.
//! * [`windows`]: k-window and ∃-window semantics.
//! * [`io`]: JSON formats and DOT export.

pub mod automata;
mod error;
pub mod io;
pub mod jumping;
mod limits;
pub mod masked;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod presburger;
pub mod semilinear;
pub mod windows;

pub use error::{Error, Result};
pub use limits::Limits;
