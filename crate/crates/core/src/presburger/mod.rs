//! Linear arithmetic over the natural numbers.
//!
//! Formulas use variables `x0, x1, …` ranging over ℕ. Quantifier elimination
//! follows Cooper's method with a nonnegativity guard on each eliminated
//! variable; explicit semilinear sets are recovered from quantifier-free
//! formulas through residue classes and Hilbert bases.

mod convert;
mod cooper;
mod formula;
mod hilbert;
mod sexpr;
mod term;

pub use convert::{formula_to_semilinear, semilinear_to_formula};
pub use cooper::{cooper_eliminate, decide_sentence};
pub use formula::{Atom, Formula};
pub use hilbert::{hilbert_basis, solve_nonneg, Basis, HomSystem};
pub use term::{Term, Var};
