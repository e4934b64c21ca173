//! Masked semilinear sets: Parikh images of infinite words.
//!
//! The Parikh image of an infinite word lives in `𝕄^Σ`, vectors over
//! `ℕ ∪ {∞}` with at least one `∞`. Such a vector splits uniquely as
//! `x ⊕ 𝔪` where the mask `𝔪 ∈ {0,∞}^Σ` records the infinite letters, so a
//! set of them is a family `S𝔪` of semilinear sets indexed by masks.

mod mask;
mod ops;
mod set;

pub use mask::{Ext, ExtVector, Mask};
pub use ops::{
    canonicalize, is_oblivious, masked_complement, masked_equivalent, masked_inclusion,
    masked_intersect, masked_membership, masked_union,
};
pub use set::MaskedSemilinearSet;
