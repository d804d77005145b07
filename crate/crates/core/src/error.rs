//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty complex")]
    EmptyComplex,

    #[error("empty facet is not allowed")]
    EmptyFacet,

    #[error("facet {0:?} contains a duplicate vertex")]
    DuplicateVertex(Vec<u32>),

    #[error("face family is not downward closed: missing face {0:?}")]
    NotClosed(Vec<u32>),

    #[error("cycle graph needs at least 3 nodes, got {0}")]
    CycleTooSmall(u32),

    #[error("path graph needs at least 1 edge, got {0}")]
    PathTooSmall(u32),

    #[error("complete graph needs at least 1 node, got {0}")]
    CompleteTooSmall(u32),

    #[error("invalid face id {id}: diagram has {count} faces")]
    InvalidFaceId { id: u32, count: usize },

    #[error("invalid cover-edge id {id}: diagram has {count} cover edges")]
    InvalidEdgeId { id: u32, count: usize },

    #[error("edge set is not a matching: edges {0} and {1} share a face")]
    NotAMatching(u32, u32),

    #[error("matching is not acyclic: reversing its edges closes a directed cycle")]
    NotAcyclic,

    #[error("matching is not perfect: {0} critical faces remain")]
    NotPerfect(usize),

    #[error("face {face} violates the local Morse condition: {reason}")]
    MorseViolation { face: String, reason: String },

    #[error(
        "face budget exceeded: more than {budget} faces \
         (partial counts by dimension: {partial:?})"
    )]
    FaceBudget { budget: usize, partial: Vec<u64> },

    #[error("subset budget exceeded: {subsets} subsets to scan, {budget} allowed")]
    SubsetBudget { subsets: u128, budget: u128 },

    #[error(
        "cube dimension {dim} exceeds the enumeration budget ({max}); \
         perfect-matching counts of larger cubes (such as the 6-cube value \
         16332454526976) are quoted from the literature, never recomputed"
    )]
    CubeBudget { dim: u32, max: u32 },

    #[error("state budget exceeded in collapsibility search ({0} states)")]
    CollapseBudget(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("homology group in dimension {0} is infinite; torsion order undefined")]
    InfiniteGroup(usize),

    #[error("graph is disconnected; the Laplacian identity assumes a connected graph")]
    Disconnected,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid rooted forest: {0}")]
    InvalidForest(String),

    #[error("expected k-faces of dimension {expected}, found {found:?}")]
    WrongFaceDimension { expected: usize, found: Vec<u32> },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("integer overflow in fixed-width elimination")]
    Overflow,

    #[error("rank disagreement for boundary {dim}: {snf} from invariant factors, {modp} mod p")]
    RankMismatch { dim: usize, snf: usize, modp: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
