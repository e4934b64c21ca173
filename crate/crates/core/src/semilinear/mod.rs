//! Semilinear subsets of ℕ^d: unions of linear sets `Lin(b, P)`.
//!
//! Vectors are indexed by alphabet position, so a set over an alphabet of
//! size `d` lives in ℕ^d. The Boolean operations go through the arithmetic
//! engine in [`crate::presburger`].

mod ops;
mod parikh;
mod set;
mod vector;

pub use ops::{sl_complement, sl_equivalent, sl_inclusion, sl_intersect};
pub use parikh::parikh_of_nfa;
pub use set::{sl_membership, LinearSet, SemilinearSet};
pub use vector::FinVector;
