/// Size caps that keep exhaustive computations from blowing up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `q^n` for which elements are enumerated.
    pub elements: u64,
    /// Largest graph order for the exact Hamiltonian cycle search.
    pub hamiltonian: usize,
    /// Largest graph order for the exact domination number.
    pub domination: usize,
    /// Largest graph order for isomorphism tests and certificates.
    pub isomorphism: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            elements: 4096,
            hamiltonian: 64,
            domination: 32,
            isomorphism: 64,
        }
    }
}

impl Limits {
    pub fn with_element_cap(mut self, cap: u64) -> Self {
        self.elements = cap;
        self
    }
}
