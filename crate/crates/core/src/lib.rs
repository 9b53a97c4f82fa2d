//! h-tilings and Morse shellings of relative simplicial complexes.
//!
//! The crate builds complexes, subdivides them (stellar and barycentric),
//! partitions their faces into basic, critical and Morse tiles, and checks
//! the resulting tilings and their h- and c-vectors.

pub mod complex;
pub mod error;
pub mod format;
pub mod generate;
pub mod poly;
pub mod relative;
pub mod search;
pub mod shelling;
pub mod tile;
pub mod tiling;
pub mod vectors;

pub use complex::{RelativeComplex, Simplex, SimplicialComplex, StructuralPredicates, VertexId};
pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use relative::{RelativeSimplex, RewriteMode};
pub use shelling::{
    facet_filtration, h_tile_regular_morse, morse_shell_barycentric, shell_complex, shell_pseudomanifold,
    shell_relative_simplex, ShellMode, ShellingResult, ShellingStats, StellarMode, SubdivisionKind, SubdivisionStep,
};
pub use tile::{MorseTile, TileClass};
pub use tiling::{
    subdivide_tile, subdivide_tiling, validate_shelling, validate_tiling, Tiling, ValidationReport, Violation,
    ViolationKind,
};
pub use vectors::{compute_vectors, TilingVectors, VectorsReport};
