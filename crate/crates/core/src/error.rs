//! Crate-wide error type.
//!
//! Every fallible operation reports which precondition failed and, where it
//! makes sense, the offending cell so callers (and the CLI) can name it.

use thiserror::Error;

/// Identifies a complex by a structural fingerprint; see `DeltaComplex::id`.
pub type ComplexId = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational literal: {0:?}")]
    BadRational(String),

    #[error("complex has no vertices")]
    EmptyComplex,

    #[error("face table shape mismatch at dimension {dim}: expected {expected} rows, found {found}")]
    FaceTableShape { dim: usize, expected: usize, found: usize },

    #[error("dimension {dim} cell {cell} face slot {slot} references {face}, but there are only {count} cells of dimension {}", dim - 1)]
    FaceIndexOutOfRange { dim: usize, cell: usize, slot: usize, face: usize, count: usize },

    #[error("cell index {cell} out of range for dimension {dim} (count {count})")]
    CellIndexOutOfRange { dim: usize, cell: usize, count: usize },

    #[error("dimension {dim} out of range (complex has dimension {top})")]
    DimensionOutOfRange { dim: usize, top: usize },

    #[error("boundary of boundary is nonzero at dimension {dim} cell {cell}")]
    NotAChainComplex { dim: usize, cell: usize },

    #[error("face maps are incoherent at dimension {dim} cell {cell} (slots {i} and {j})")]
    FaceIncoherent { dim: usize, cell: usize, i: usize, j: usize },

    #[error("not closed: dimension {dim} cell {cell} lies in {incidences} top-cell face slots, expected exactly 2")]
    NotClosed { dim: usize, cell: usize, incidences: usize },

    #[error("top dimension is not orientable: sign propagation fails at cell {cell}")]
    NotOrientable { cell: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("chain/cochain belongs to complex {found:016x}, expected {expected:016x}")]
    WrongComplex { expected: ComplexId, found: ComplexId },

    #[error("mismatched complex or dimension (left dim {left_dim}, right dim {right_dim})")]
    MismatchedComplexOrDimension { left_dim: usize, right_dim: usize },

    #[error("not a simplicial map: dimension {dim} cell {cell} slot {slot} does not commute with faces")]
    NotASimplicialMap { dim: usize, cell: usize, slot: usize },

    #[error("chain is not a cycle (boundary is nonzero)")]
    NotACycle,

    #[error("chain does not lie in the span of the basis classes modulo boundaries")]
    NotInSpan,

    #[error("map undefined on support atom {atom}")]
    PartialMap { atom: usize },

    #[error("integrand undefined on support atom {atom}")]
    PartialFunction { atom: usize },

    #[error("atom {atom} out of range for carrier of size {size}")]
    AtomOutOfRange { atom: usize, size: usize },

    #[error("measures live on different carriers")]
    CarrierMismatch,

    #[error("labels violate the cocycle condition at 2-cell {cell}")]
    NotACocycle { cell: usize },

    #[error("no surjective cocycle exists for modulus {modulus}")]
    NoSurjectiveCocycle { modulus: u64 },

    #[error("{value} does not divide the tower's sheet count {sheets}")]
    NotDivisors { value: u64, sheets: u64 },

    #[error("unsupported dimension {dim}: operation is implemented for dimension <= {max}")]
    UnsupportedDimension { dim: usize, max: usize },

    #[error("complex is not a circle built by the circle builder")]
    NotACircle,

    #[error("length cap {got} is below the circle length {needed}")]
    LengthTooShort { needed: usize, got: usize },

    #[error("exhaustive path search supports at most {max_edges} edges and length cap {max_len}; got {edges} edges, cap {len}")]
    SearchTooLarge { max_edges: usize, max_len: usize, edges: usize, len: usize },

    #[error("internal LP failed: {0}")]
    LpFailure(String),

    #[error("two independently computed values of the same quantity disagree")]
    Inconsistent,
}

pub type Result<T> = std::result::Result<T, Error>;
