/// Resource caps for the exponential parts of the library.
///
/// Every construction that can blow up checks one of these and fails with
/// [`Error::ResourceCap`](crate::Error::ResourceCap) instead of running away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Atoms produced while expanding a formula into disjunctive normal form.
    pub dnf_atoms: usize,
    /// Frontier size of the minimal-solution search for linear Diophantine systems.
    pub hilbert_frontier: usize,
    /// Path configurations explored while computing a Parikh image.
    pub parikh_configs: usize,
    /// States of any automaton built by a construction.
    pub states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dnf_atoms: 1_000_000,
            hilbert_frontier: 10_000,
            parikh_configs: 2_000_000,
            states: 200_000,
        }
    }
}

impl Limits {
    /// The same cap for every resource.
    pub fn uniform(cap: usize) -> Self {
        Limits {
            dnf_atoms: cap,
            hilbert_frontier: cap,
            parikh_configs: cap,
            states: cap,
        }
    }
}
