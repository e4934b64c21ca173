//! Window-restricted jumping semantics.
//!
//! In the `k`-window semantics a word may only be permuted inside the
//! consecutive blocks `w[0..k)`, `w[k..2k)`, …; [`kwindow_construct`] builds a
//! Büchi automaton for it. The `∃`-window semantics lets the block size be
//! chosen per word. Membership there is only semi-decided here, by trying
//! `k = 1, 2, …` up to a bound.

mod ewindow;
mod kwindow;

pub use ewindow::{ewindow_construct, ewindow_member_bounded, WindowSearch};
pub use kwindow::{kwindow_construct, kwindow_member_up, KWindow};
