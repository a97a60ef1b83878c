//! Ring fixtures shared by the benchmarks.

/// Rings of increasing size with non-trivial ideal lattices.
pub const RINGS: &[&str] = &["Z36", "Z2 x Z2 x Z2", "LocalAlg(3)", "Idealize(Z16, (4))", "Z8 x Z12", "Z2 x Z4 x Z8"];
