//! Discrete Morse theory toolkit.
//!
//! The crate is organized around a small chain of combinatorial objects:
//!
//! * [`complex`] — abstract simplicial complexes with a canonical
//!   (dimension, lexicographic) face order, plus standard generators
//!   (simplices, cycles, paths, complete graphs).
//! * [`hasse`] — the Hasse diagram of a complex: faces plus covering pairs,
//!   both densely indexed in a deterministic order.
//! * [`morse`] — acyclic matchings on Hasse diagrams: validation,
//!   enumeration, Morse functions, and collapsibility certificates.
//! * [`morse_complex`] — the (pure) Morse complex of a complex: the
//!   simplicial complex whose faces are the nonempty acyclic matchings.
//! * [`homology`] — exact reduced integer homology via sparse Smith normal
//!   form, with a prime-field rank cross-check.
//! * [`graph_morse`] — the one-dimensional specialization: rooted forests,
//!   the Laplacian characteristic-polynomial identity, and the closed-form
//!   f-vector for complete graphs.
//! * [`simplex_enum`] — the cube-digraph model of a simplex's face poset,
//!   perfect-matching counts, Kalai (k,n)-trees, and counting bounds.
//!
//! All enumerations are deterministic: output order depends only on the
//! canonical face/edge indexing, never on hashing or thread scheduling.

pub mod complex;
pub mod error;
pub mod graph_morse;
pub mod hasse;
pub mod homology;
pub mod io;
pub mod morse;
pub mod morse_complex;
pub mod simplex_enum;

pub use complex::{FVector, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use graph_morse::{Graph, IntegerPolynomial, RootedForest};
pub use hasse::{CoverEdge, HasseDiagram};
pub use homology::{ChainComplex, HomologyGroups, IntegerMatrix};
pub use morse::{CriticalSet, MatchMode, MorseFunction, MorseMatching};
pub use morse_complex::{MorseComplex, MorseKind};
pub use simplex_enum::{BoundReport, CubeDigraph, KTree};
