//! Jumping semantics: an automaton accepts every word that has a
//! permutation in its Büchi language.
//!
//! The pipeline runs in both directions: an automaton yields its masked
//! Parikh image, and a masked set yields a deterministic automaton with that
//! image. Closure and decision procedures are built from the two.

mod closure;
mod dba;
mod parikh;

pub use closure::{jumping_closure, jumping_decide, ClosureKind, DecisionProblem};
pub use dba::{masked_to_dba, representative_word};
pub use parikh::{compute_mask_set, jumping_member_up, jumping_parikh, parikh_of_up};
