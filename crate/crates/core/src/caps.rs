/// Hard size limits. Constructors fail with an error rather than degrade.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of ring elements.
    pub elements: usize,
    /// Maximum number of ideals in an enumerated lattice.
    pub ideals: usize,
    /// Maximum ring size accepted by the isomorphism search.
    pub iso_search: usize,
}

impl Caps {
    pub const DEFAULT_ELEMENTS: usize = 1024;
    pub const DEFAULT_IDEALS: usize = 100_000;
    pub const DEFAULT_ISO_SEARCH: usize = 64;

    pub fn with_elements(mut self, elements: usize) -> Self {
        self.elements = elements;
        self
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: Self::DEFAULT_ELEMENTS,
            ideals: Self::DEFAULT_IDEALS,
            iso_search: Self::DEFAULT_ISO_SEARCH,
        }
    }
}
